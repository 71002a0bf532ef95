#ifndef PADELOG_NUMERIC_EVAL_HPP
#define PADELOG_NUMERIC_EVAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "padelog/measures.hpp"
#include "padelog/pade_binlog.hpp"
#include "padelog/rational.hpp"
#include "padelog/real.hpp"
#include "padelog/series.hpp"

namespace padelog {

struct ConvergenceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Archimedean evaluation with rigorous rational intervals: a value is a
// center plus an outward error radius, both exact rationals. Elementary
// series (binomial, log) carry geometric tail majorants valid for |x| < 1.

struct RatBall {
    Rat center;
    Rat radius;  // >= 0

    RatBall operator+(const RatBall& o) const { return {center + o.center, radius + o.radius}; }
    RatBall operator*(const RatBall& o) const {
        return {center * o.center,
                abs_rat(center) * o.radius + abs_rat(o.center) * radius + radius * o.radius};
    }
    RatBall scaled(const Rat& a) const { return {center * a, radius * abs_rat(a)}; }
    RatBall pow(unsigned e) const {
        RatBall out{Rat(1), Rat(0)};
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }
};

namespace detail {

// |C(omega,k)| <= 1 for omega in [0,1), so the binomial tail is geometric.
inline RatBall binom_ball(const Rat& omega, const Rat& x, int terms) {
    Rat ax = abs_rat(x);
    RatBall out{gen_binom(omega, terms).eval(x), pow_rat(ax, terms + 1) / (1 - ax)};
    return out;
}

inline RatBall log1p_ball(const Rat& x, int terms) {
    Rat ax = abs_rat(x);
    RatBall out{gen_log1p(terms).eval(x),
                pow_rat(ax, terms + 1) / (Rat(terms + 1) * (1 - ax))};
    return out;
}

}  // namespace detail

struct LinearForm {
    std::vector<Rat> omegas;
    std::vector<int> rs;
    std::vector<std::vector<Rat>> beta;  // beta[i][j], 0 <= j <= r_i - 1

    void validate() const {
        if (omegas.size() != rs.size() || beta.size() != omegas.size())
            throw std::invalid_argument("LinearForm: shape mismatch");
        bool any = false;
        for (size_t i = 0; i < beta.size(); ++i) {
            if (static_cast<int>(beta[i].size()) != rs[i])
                throw std::invalid_argument("LinearForm: beta row length != r_i");
            for (const auto& b : beta[i]) any = any || b != 0;
        }
        if (!any) throw std::invalid_argument("LinearForm: beta must be nonzero");
    }
};

struct RealWithRadius {
    Real value;
    Real radius;
};

// Evaluates sum beta_{i,j} (1+1/alpha)^{omega_i} log^j(1+1/alpha) with the
// radius certified from the series majorants; term count doubles until the
// radius target 2^-bits is met.
inline RealWithRadius eval_form_real(const LinearForm& form, const Rat& alpha, unsigned bits) {
    form.validate();
    if (!(abs_rat(alpha) > 1))
        throw ConvergenceViolation("eval_form_real: |alpha| > 1 required");
    Rat x = 1 / alpha;
    Rat target = pow_rat(Rat(2), -static_cast<long>(bits));
    int terms = 16;
    RatBall total{Rat(0), target + 1};
    while (total.radius > target) {
        total = {Rat(0), Rat(0)};
        RatBall lg = detail::log1p_ball(x, terms);
        for (size_t i = 0; i < form.omegas.size(); ++i) {
            RatBall bi = detail::binom_ball(form.omegas[i], x, terms);
            RatBall lp{Rat(1), Rat(0)};
            for (int j = 0; j < form.rs[i]; ++j) {
                if (form.beta[i][j] != 0) total = total + (bi * lp).scaled(form.beta[i][j]);
                lp = lp * lg;
            }
        }
        if (terms > (1 << 22))
            throw ConvergenceViolation("eval_form_real: radius target unreachable");
        terms *= 2;
    }
    PrecisionGuard guard(bits + 16);
    return {to_real(total.center), to_real(total.radius)};
}

// ---------------------------------------------------------------------------
// p-adic evaluation. The series is an exact truncation of a known generator
// family; the tail contribution is floored through the strong triangle
// inequality with a per-family coefficient-valuation floor.

enum class PadicSeriesKind {
    polynomial,  // exact polynomial, no tail
    integral,    // integer-style coefficients, v_p(c_k) >= 0
    log_type,    // v_p(c_k) >= -log_p(k)
    binomial,    // v_p(c_k) >= -(k + floor(k/(p-1))), the mu_lambda(omega) factor
};

struct PadicValue {
    Int prime;
    long valuation = 0;
    bool certified = false;  // tail floor strictly above the partial-sum valuation
    Int unit_mod;            // unit part of the partial sum mod p^M (0 when sum is 0)
    unsigned digits = 0;     // M
};

inline PadicValue eval_series_padic(const TruncSeries& series, const Rat& x, const Int& p,
                                    PadicSeriesKind kind, unsigned digits = 8) {
    if (x == 0) throw std::invalid_argument("eval_series_padic: x = 0");
    long vx = valuation(x, p);
    int N = series.trunc_order();

    // Convergence precondition and tail floor per family; a polynomial has no
    // tail. The floor is min over lambda > N of v_p(c_lambda x^lambda) using
    // the per-family coefficient valuation bound; each minimand is increasing
    // in lambda under the stated precondition, so lambda = N+1 suffices.
    Rat vx_q(vx);
    Rat tail_floor(0);
    switch (kind) {
        case PadicSeriesKind::polynomial:
            break;
        case PadicSeriesKind::integral:
        case PadicSeriesKind::log_type:
            if (vx < 1)
                throw ConvergenceViolation("eval_series_padic: v_p(x) >= 1 required");
            tail_floor = Rat(N + 1) * vx_q;
            if (kind == PadicSeriesKind::log_type) {
                // v_p(c_lambda) >= -log_p(lambda) >= -e with p^e >= N+1
                long e = 0;
                Int pe = 1;
                while (pe < N + 1) {
                    pe *= p;
                    ++e;
                }
                tail_floor -= e;
            }
            break;
        case PadicSeriesKind::binomial: {
            Rat rate = Rat(p) / Rat(Int(p - 1));
            if (!(vx_q > rate))
                throw ConvergenceViolation(
                    "eval_series_padic: v_p(x) > p/(p-1) required for binomial coefficients");
            tail_floor = Rat(N + 1) * (vx_q - rate);
            break;
        }
    }

    Rat sum = series.eval(x);
    PadicValue out;
    out.prime = p;
    out.digits = digits;
    if (kind == PadicSeriesKind::polynomial) {
        out.certified = true;
    } else {
        if (sum == 0) {
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), tail_floor.get_num().get_mpz_t(),
                       tail_floor.get_den().get_mpz_t());
            out.valuation = fl.get_si();
            out.certified = false;
            return out;
        }
        out.certified = Rat(valuation(sum, p)) < tail_floor;
    }
    if (sum == 0) {
        out.certified = kind == PadicSeriesKind::polynomial;
        return out;
    }
    out.valuation = valuation(sum, p);
    Int pv = pow_int(p, static_cast<unsigned long>(std::abs(out.valuation)));
    Rat unit = out.valuation >= 0 ? Rat(sum / Rat(pv)) : Rat(sum * pv);
    Int mod = pow_int(p, digits);
    // unit = a/b with b coprime to p; unit mod p^M = a * b^{-1} mod p^M.
    Int binv;
    if (mpz_invert(binv.get_mpz_t(), unit.get_den().get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::logic_error("eval_series_padic: denominator not invertible mod p^M");
    Int u = (unit.get_num() % mod) * binv % mod;
    if (u < 0) u += mod;
    out.unit_mod = u;
    return out;
}

// ---------------------------------------------------------------------------
// Finite-n diagnostics backing the asymptotic coefficient and remainder
// estimates.

struct GrowthRow {
    int n;
    Real log_max_coeff;  // log max |p_{k,h,i,j}|
    Real g;              // log max - (sum r) log(2^n / (n+1)!)
    Real g_over_n;
};

inline std::vector<GrowthRow> coeff_growth_diag(const std::vector<Rat>& omegas,
                                                const std::vector<int>& rs,
                                                const std::vector<int>& ns) {
    std::vector<GrowthRow> rows;
    int sum_r = std::accumulate(rs.begin(), rs.end(), 0);
    for (int n : ns) {
        Rat maxabs(0);
        for (int k = 1; k <= sum_r; ++k) {
            SingleSystem sys = build_system(SystemConfig{omegas, rs, n, k});
            for (const auto& per_i : sys.raw_pf)
                for (const auto& per_h : per_i)
                    for (const auto& c : per_h)
                        if (abs_rat(c) > maxabs) maxabs = abs_rat(c);
        }
        GrowthRow row;
        row.n = n;
        row.log_max_coeff = log_rat(maxabs);
        Real scale = Real(n) * log(Real(2)) - log_int(factorial(n + 1));
        row.g = row.log_max_coeff - Real(sum_r) * scale;
        row.g_over_n = n > 0 ? Real(row.g / n) : row.g;
        rows.push_back(row);
    }
    return rows;
}

struct DecayRow {
    int n;
    Real measured;  // log |D_{n+1} alpha^{n+1} R_1(1/alpha)|
    Real bound;     // explicit finite part of the remainder lemma
    Real slack;     // 0.1 * n * h_inf(alpha)
    bool pass = false;
};

inline std::vector<DecayRow> remainder_decay_diag(const std::vector<Rat>& omegas,
                                                  const std::vector<int>& rs, const Rat& alpha,
                                                  const std::vector<int>& ns, int k = 1,
                                                  int tail_terms = 40) {
    if (!(abs_rat(alpha) > 1))
        throw ConvergenceViolation("remainder_decay_diag: |alpha| > 1 required");
    std::vector<DecayRow> rows;
    int sum_r = std::accumulate(rs.begin(), rs.end(), 0);
    int r = *std::max_element(rs.begin(), rs.end());
    Real h_inf = height_at(alpha, PlaceSpec::infinite_place());
    Rat x = 1 / alpha;
    for (int n : ns) {
        SingleSystem sys = build_system(SystemConfig{omegas, rs, n, k}, tail_terms);
        Int D = scaling_Dn(omegas, rs, n);
        Rat partial = sys.remainder.eval(x);
        if (partial == 0) throw std::logic_error("remainder_decay_diag: vanished partial sum");
        DecayRow row;
        row.n = n;
        row.measured = log_rat(abs_rat(partial)) + log_int(D) + Real(n + 1) * log_rat(abs_rat(alpha));
        row.bound = -Real(n + 1) * Real(sum_r - 1) * h_inf +
                    Real(sum_r + 1) * Real(n) * log(Real(2)) +
                    Real(r) * log_int(scaling_block(omegas, n));
        row.slack = Real("0.1") * Real(n) * h_inf;
        row.pass = row.measured <= row.bound + row.slack;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace padelog

#endif
