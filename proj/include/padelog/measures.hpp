#ifndef PADELOG_MEASURES_HPP
#define PADELOG_MEASURES_HPP

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "padelog/number_theory.hpp"
#include "padelog/rational.hpp"
#include "padelog/real.hpp"

namespace padelog {

struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// h_v(alpha) at one place of Q.
inline Real height_at(const Rat& alpha, const PlaceSpec& place) {
    if (alpha == 0) throw std::invalid_argument("height_at: zero input");
    if (place.kind == PlaceSpec::Kind::archimedean) {
        Rat a = abs_rat(alpha);
        return a > 1 ? log_rat(a) : Real(0);
    }
    long v = valuation(alpha, place.prime);
    return v < 0 ? Real(-v) * log_int(place.prime) : Real(0);
}

/// h(alpha) = log max(|num|, den).
inline Real height_total(const Rat& alpha) {
    return log_int(heights(alpha).h_total_arg);
}

// C(omega) = (sum r + 1) log 2
//          + 3 r sum_{i1<i2} den(w_{i2}-w_{i1})/phi(den) * sum_{(j,den)=1} 1/j
//          + r,   with r = max r_i.
inline Real c_omega(const std::vector<Rat>& omegas, const std::vector<int>& rs) {
    if (omegas.empty() || omegas.size() != rs.size())
        throw std::invalid_argument("c_omega: bad inputs");
    int sum_r = std::accumulate(rs.begin(), rs.end(), 0);
    int r = *std::max_element(rs.begin(), rs.end());
    Real out = Real(sum_r + 1) * log(Real(2)) + Real(r);
    for (size_t i1 = 0; i1 < omegas.size(); ++i1)
        for (size_t i2 = i1 + 1; i2 < omegas.size(); ++i2) {
            unsigned long d = den_of_set({omegas[i2] - omegas[i1]}).get_ui();
            Rat harmonic(0);
            for (unsigned long j = 1; j <= d; ++j) {
                Int g;
                mpz_gcd_ui(g.get_mpz_t(), Int(static_cast<unsigned long>(d)).get_mpz_t(), j);
                if (g == 1) harmonic += make_rat(1, static_cast<long>(j));
            }
            out += Real(3 * r) * to_real(Rat(static_cast<long>(d)) / Rat(static_cast<long>(euler_phi(d))) * harmonic);
        }
    return out;
}

struct MeasureInputs {
    std::vector<Rat> omegas;
    std::vector<int> rs;
    Rat alpha;
    PlaceSpec place;
    Real epsilon;
};

struct MeasureReport {
    Real C_omega, A, B, U, V, mu, C_eps;
    bool valid = false;
    std::string reason;
    std::vector<std::pair<std::string, Real>> terms;
};

/// mu and C from the criterion constants alone; requires A - B > eps > 0.
inline std::pair<Real, Real> criterion_eval(const Real& A, const Real& B, const Real& U,
                                            const Real& eps) {
    Real V = A - B;
    if (!(eps > 0) || !(eps < V))
        throw std::range_error("criterion_eval: need 0 < eps < V = A - B");
    Real mu = (A + U) / (V - eps);
    Real C = Real(1) / 2 * exp(-(V - eps + log(Real(2))) * (B + U + eps) / (V - eps));
    return {mu, C};
}

inline MeasureReport measure(const MeasureInputs& in) {
    if (in.omegas.empty() || in.omegas.size() != in.rs.size())
        throw std::invalid_argument("measure: bad omegas/rs");
    if (in.alpha == 0 || in.alpha == -1)
        throw HypothesisViolation("measure: alpha must avoid {0, -1}");
    int sum_r = std::accumulate(in.rs.begin(), in.rs.end(), 0);
    int eps_v = in.place.epsilon();

    Int den_omega = den_of_set(in.omegas);
    bool p_divides_den =
        in.place.kind == PlaceSpec::Kind::finite &&
        mpz_divisible_p(den_omega.get_mpz_t(), in.place.prime.get_mpz_t());

    // Hypothesis on |alpha|_{v0}.
    if (in.place.kind == PlaceSpec::Kind::archimedean) {
        if (!(abs_rat(in.alpha) > 1))
            throw HypothesisViolation("measure: |alpha| > 1 required at the infinite place");
    } else {
        long v = valuation(in.alpha, in.place.prime);
        // |alpha|_p = p^{-v}; the stricter branch needs p^{-v} > p^{p/(p-1)}.
        if (!p_divides_den) {
            if (!(v < 0)) throw HypothesisViolation("measure: |alpha|_p > 1 required");
        } else {
            Real lhs = Real(-v);  // log_p |alpha|_p
            Real rhs = to_real(in.place.prime) / to_real(Int(in.place.prime - 1));
            if (!(lhs > rhs))
                throw HypothesisViolation(
                    "measure: |alpha|_p > p^{p/(p-1)} required when p | den(omega)");
        }
    }

    MeasureReport rep;
    rep.C_omega = c_omega(in.omegas, in.rs);
    Real h_v0 = height_at(in.alpha, in.place);
    Real h_tot = height_total(in.alpha);
    Real log2 = log(Real(2));

    Real A_height = Real(sum_r - 1) * h_v0;
    Real A_comega = -Real(eps_v) * rep.C_omega;
    Real A_padic(0);
    if (p_divides_den) {
        // -(eps_v - 1) * (sum r) p/(p-1) * log|p|_{v0}, with log|p|_p = -log p.
        Real p = to_real(in.place.prime);
        A_padic = -Real(eps_v - 1) * Real(sum_r) * p / (p - 1) * (-log(p));
    }
    rep.A = A_height + A_comega + A_padic;
    rep.terms.emplace_back("A.height", A_height);
    rep.terms.emplace_back("A.c_omega", A_comega);
    rep.terms.emplace_back("A.padic_correction", A_padic);

    Real B_main = Real(sum_r - 1) * (h_tot + rep.C_omega);
    rep.B = B_main - h_v0 - Real(eps_v) * rep.C_omega;
    rep.terms.emplace_back("B.main", B_main);
    rep.terms.emplace_back("B.minus_height_v0", -h_v0);
    rep.terms.emplace_back("B.minus_c_omega", -Real(eps_v) * rep.C_omega);

    rep.U = h_v0 + Real(eps_v) * rep.C_omega;
    rep.terms.emplace_back("U.height_v0", h_v0);
    rep.terms.emplace_back("U.c_omega", Real(eps_v) * rep.C_omega);

    rep.V = rep.A - rep.B;
    if (!(rep.V > 0)) {
        rep.reason = "V <= 0: no measure at this alpha";
        return rep;
    }
    if (!(in.epsilon > 0) || !(in.epsilon < rep.V)) {
        rep.reason = "epsilon outside (0, V)";
        return rep;
    }
    auto [mu, C] = criterion_eval(rep.A, rep.B, rep.U, in.epsilon);
    rep.mu = mu;
    rep.C_eps = C;
    rep.valid = true;
    return rep;
}

// Corollary specialization: m = 1, omega = 0, infinite place, integer-style alpha.
inline Real corollary_V(int r, const Rat& alpha) {
    if (r < 2) throw std::invalid_argument("corollary_V: r >= 2 required");
    Real h_inf = height_at(alpha, PlaceSpec::infinite_place());
    return Real(r) * h_inf - Real(r - 1) * (height_total(alpha) + Real(r + 1) * log(Real(2)) + Real(r));
}

/// log of the smallest integer |alpha| with V(alpha) > 0: (r-1)((r+1) log 2 + r).
inline Real corollary_threshold_exponent(int r) {
    if (r < 2) throw std::invalid_argument("corollary_threshold_exponent: r >= 2 required");
    return Real(r - 1) * (Real(r + 1) * log(Real(2)) + Real(r));
}

}  // namespace padelog

#endif
