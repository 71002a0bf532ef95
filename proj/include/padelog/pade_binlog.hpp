#ifndef PADELOG_PADE_BINLOG_HPP
#define PADELOG_PADE_BINLOG_HPP

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "padelog/number_theory.hpp"
#include "padelog/pade_exp.hpp"
#include "padelog/polynomial.hpp"
#include "padelog/rational.hpp"
#include "padelog/series.hpp"

namespace padelog {

struct NormalityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (omega_1 < ... < omega_m in Q cap [0,1), weights r_i >= 1, degree n, column
// index 1 <= k <= sum r_i). The k-decomposition k = r_1+...+r_u + s_{u+1}
// is computed greedily from the prefix sums.
struct SystemConfig {
    std::vector<Rat> omegas;
    std::vector<int> rs;
    int n = 0;
    int k = 1;

    int m() const { return static_cast<int>(omegas.size()); }
    int sum_r() const { return std::accumulate(rs.begin(), rs.end(), 0); }

    void validate() const {
        if (omegas.empty() || omegas.size() != rs.size())
            throw std::invalid_argument("SystemConfig: omegas/rs size mismatch or empty");
        for (size_t i = 0; i < omegas.size(); ++i) {
            if (omegas[i] < 0 || omegas[i] >= 1)
                throw std::invalid_argument("SystemConfig: omegas must lie in [0,1)");
            if (i + 1 < omegas.size() && !(omegas[i] < omegas[i + 1]))
                throw std::invalid_argument("SystemConfig: omegas must be strictly increasing");
            if (rs[i] < 1) throw std::invalid_argument("SystemConfig: weights must be >= 1");
        }
        if (n < 0) throw std::invalid_argument("SystemConfig: n must be >= 0");
        if (k < 1 || k > sum_r())
            throw std::invalid_argument("SystemConfig: k out of range 1..sum(rs)");
    }

    // u and s_{u+1} with k = r_1 + ... + r_u + s_{u+1}, 1 <= s_{u+1} <= r_{u+1}.
    std::pair<int, int> k_decomposition() const {
        int rest = k;
        int u = 0;
        while (rest > rs[u]) {
            rest -= rs[u];
            ++u;
        }
        return {u, rest};
    }
};

/// Pole layout of the rational function F_k.
inline PoleConfig build_Fk(const SystemConfig& cfg) {
    cfg.validate();
    auto [u, s] = cfg.k_decomposition();
    PoleConfig pc;
    for (int i = 0; i < cfg.m(); ++i) {
        int hmax = i < u ? cfg.n + 1 : cfg.n;
        for (int h = 0; h <= hmax; ++h) {
            pc.poles.push_back(cfg.omegas[i] + h);
            pc.multiplicities.push_back(cfg.rs[i]);
        }
        if (i == u) {
            pc.poles.push_back(cfg.omegas[i] + cfg.n + 1);
            pc.multiplicities.push_back(s);
        }
    }
    return pc;
}

// One column of the construction: the polynomials P_{k,i,j}(z) in the
// monomial basis together with the certified remainder.
struct SingleSystem {
    SystemConfig config;
    std::vector<std::vector<Poly>> P;  // P[i][j], deg <= n+1
    // Raw partial-fraction coefficients p_{k,h,i,j}: raw_pf[i][h][j-1].
    std::vector<std::vector<std::vector<Rat>>> raw_pf;
    TruncSeries remainder;             // sum P_{i,j}(z) (1+z)^{omega_i} log^j(1+z)
    int certified_order = 0;           // (n+1) sum r + k - 1
};

inline int expected_order(const SystemConfig& cfg) {
    return (cfg.n + 1) * cfg.sum_r() + cfg.k - 1;
}

inline SingleSystem build_system(const SystemConfig& cfg, int trunc_margin = 3) {
    cfg.validate();
    PoleConfig pc = build_Fk(cfg);
    PartialFractionTable table = partial_fractions(pc);

    // Regroup table entries by (i, h): pole index within pc follows build_Fk's
    // emission order.
    auto [u, s] = cfg.k_decomposition();
    SingleSystem sys;
    sys.config = cfg;
    sys.P.assign(cfg.m(), {});
    size_t pole_idx = 0;
    std::vector<std::vector<std::vector<Rat>>> p_coeff(cfg.m());  // p_coeff[i][h][j-1]
    for (int i = 0; i < cfg.m(); ++i) {
        p_coeff[i].assign(cfg.n + 2, std::vector<Rat>(cfg.rs[i], Rat(0)));
        int hmax = i < u ? cfg.n + 1 : cfg.n;
        for (int h = 0; h <= hmax; ++h, ++pole_idx)
            for (int j = 1; j <= cfg.rs[i]; ++j) p_coeff[i][h][j - 1] = table.coeff[pole_idx][j - 1];
        if (i == u) {
            for (int j = 1; j <= s; ++j) p_coeff[i][cfg.n + 1][j - 1] = table.coeff[pole_idx][j - 1];
            ++pole_idx;
        }
    }

    sys.raw_pf = p_coeff;
    int target = expected_order(cfg);
    int trunc = target + trunc_margin;
    TruncSeries rem = TruncSeries::zero(trunc);
    TruncSeries log_series = gen_log1p(trunc);
    for (int i = 0; i < cfg.m(); ++i) {
        TruncSeries binom = gen_binom(cfg.omegas[i], trunc);
        TruncSeries log_pow = TruncSeries::one(trunc);
        Rat jfact(1);
        for (int j = 0; j <= cfg.rs[i] - 1; ++j) {
            Poly pij;
            for (int h = 0; h <= cfg.n + 1; ++h) {
                const Rat& a = p_coeff[i][h][j];  // p_{k,h,i,j+1}
                if (a != 0) pij = pij + one_plus_z_pow(h).scaled(a / jfact);
            }
            sys.P[i].push_back(pij);
            if (!pij.is_zero()) rem = rem + pij.as_series(trunc) * binom * log_pow;
            log_pow = log_pow * log_series;
            jfact *= j + 1;
        }
    }
    sys.remainder = rem;
    auto ord = rem.ord();
    if (!ord) throw InconclusiveTruncation("build_system: remainder vanishes to truncation");
    if (*ord != target)
        throw NormalityViolation("build_system: remainder order " + std::to_string(*ord) +
                                 " differs from expected " + std::to_string(target));
    sys.certified_order = target;
    return sys;
}

/// All columns k = 1..sum(rs) for one (omegas, rs, n).
struct PadeSystem {
    std::vector<Rat> omegas;
    std::vector<int> rs;
    int n = 0;
    std::vector<SingleSystem> columns;
    Int scaling;  // D_{n+1}
};

/// The bracketed factor [prod D^2 d] * d_{n+1} shared by D_{n+1} and the bounds.
/// Both signed differences contribute: the local expansion around poles of
/// node i sees the gaps omega_i - omega_i' in either direction, and the
/// negative-direction d-factor carries primes the positive one cannot.
inline Int scaling_block(const std::vector<Rat>& omegas, int n) {
    Int block = 1;
    for (size_t i1 = 0; i1 < omegas.size(); ++i1)
        for (size_t i2 = 0; i2 < omegas.size(); ++i2) {
            if (i1 == i2) continue;
            Rat diff = omegas[i2] - omegas[i1];
            block *= big_D(diff, static_cast<unsigned long>(n + 2)) *
                     big_D(diff, static_cast<unsigned long>(n + 2)) *
                     small_d(diff, static_cast<unsigned long>(n + 2));
        }
    return block * d_lcm(static_cast<unsigned long>(n + 1));
}

/// D_{n+1}, the single integer clearing all coefficient denominators.
inline Int scaling_Dn(const std::vector<Rat>& omegas, const std::vector<int>& rs, int n) {
    int r = *std::max_element(rs.begin(), rs.end());
    int sum_r = std::accumulate(rs.begin(), rs.end(), 0);
    Int base = factorial(static_cast<unsigned long>(r - 1));
    base *= pow_int(factorial(static_cast<unsigned long>(n + 2)), static_cast<unsigned long>(sum_r));
    return base * pow_int(scaling_block(omegas, n), static_cast<unsigned long>(r));
}

inline PadeSystem build_all(const std::vector<Rat>& omegas, const std::vector<int>& rs, int n,
                            int trunc_margin = 3) {
    PadeSystem sys;
    sys.omegas = omegas;
    sys.rs = rs;
    sys.n = n;
    sys.scaling = scaling_Dn(omegas, rs, n);
    int total = std::accumulate(rs.begin(), rs.end(), 0);
    for (int k = 1; k <= total; ++k)
        sys.columns.push_back(build_system(SystemConfig{omegas, rs, n, k}, trunc_margin));
    return sys;
}

/// True iff D_{n+1} * P_{k,i,j} has integer coefficients throughout.
inline bool check_integrality(const PadeSystem& sys) {
    for (const auto& col : sys.columns)
        for (const auto& row : col.P)
            for (const auto& p : row)
                for (const auto& c : p.coeffs())
                    if (!is_integer(Rat(c * sys.scaling))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Staircase indices: per i a partition s_{i,1..l} of r_i with strictly
// decreasing degrees n_{i,1} > ... > n_{i,l}. The induced weight on the
// exponential side assigns pole omega_i + k multiplicity
// sum of s_{i,v} over blocks with n_{i,v} >= k.

struct StaircaseBlock {
    int s = 1;    // partition part
    int deg = 0;  // n_{i,v}
};

struct StaircaseIndex {
    std::vector<std::vector<StaircaseBlock>> per_i;

    void validate(const std::vector<int>& rs) const {
        if (per_i.size() != rs.size()) throw std::invalid_argument("StaircaseIndex: size mismatch");
        for (size_t i = 0; i < per_i.size(); ++i) {
            if (per_i[i].empty()) throw std::invalid_argument("StaircaseIndex: empty block list");
            int total = 0;
            for (size_t v = 0; v < per_i[i].size(); ++v) {
                if (per_i[i][v].s < 1 || per_i[i][v].deg < 0)
                    throw std::invalid_argument("StaircaseIndex: bad block");
                if (v + 1 < per_i[i].size() && per_i[i][v].deg <= per_i[i][v + 1].deg)
                    throw std::invalid_argument("StaircaseIndex: degrees must strictly decrease");
                total += per_i[i][v].s;
            }
            if (total != rs[i]) throw std::invalid_argument("StaircaseIndex: partition sum != r_i");
        }
    }

    int mult_at(size_t i, int kk) const {
        int m = 0;
        for (const auto& b : per_i[i])
            if (b.deg >= kk) m += b.s;
        return m;
    }

    /// Degree bound n_{i,v} for column j (0-based within 0..r_i-1).
    int degree_bound(size_t i, int j) const {
        int acc = 0;
        for (const auto& b : per_i[i]) {
            acc += b.s;
            if (j < acc) return b.deg;
        }
        throw std::invalid_argument("StaircaseIndex: j out of range");
    }

    int weight_total() const {
        int N = 0;
        for (const auto& blocks : per_i)
            for (const auto& b : blocks) N += (b.deg + 1) * b.s;
        return N;
    }
};

struct StaircaseSystem {
    std::vector<std::vector<Poly>> P;  // P[i][j] with deg <= n_{i,v(j)}
    TruncSeries remainder;
    TruncSeries exp_remainder;  // remainder of the exponential system pre-substitution
    int certified_order = 0;    // weight_total() - 1
};

// Builds the weight-r exponential system for (e^{(omega_i + k) z}) via partial
// fractions and regroups its coefficients into (1+z)^k polynomials per the
// block identities, then certifies the order of the substituted remainder.
inline StaircaseSystem staircase_transform(const std::vector<Rat>& omegas,
                                           const std::vector<int>& rs, const StaircaseIndex& idx,
                                           int trunc_margin = 3) {
    idx.validate(rs);
    for (size_t i = 0; i < omegas.size(); ++i)
        for (size_t j = i + 1; j < omegas.size(); ++j)
            if (is_integer(Rat(omegas[i] - omegas[j])))
                throw std::invalid_argument("staircase_transform: omega_i - omega_j in Z");

    PoleConfig pc;
    std::vector<std::pair<size_t, int>> pole_key;  // (i, k)
    for (size_t i = 0; i < omegas.size(); ++i) {
        int top = idx.per_i[i].front().deg;
        for (int kk = 0; kk <= top; ++kk) {
            pc.poles.push_back(omegas[i] + kk);
            pc.multiplicities.push_back(idx.mult_at(i, kk));
            pole_key.emplace_back(i, kk);
        }
    }
    PartialFractionTable table = partial_fractions(pc);

    int target = idx.weight_total() - 1;
    int trunc = target + trunc_margin;

    // Exponential polynomials and remainder.
    std::vector<std::vector<Poly>> exp_polys(omegas.size());
    TruncSeries exp_rem = TruncSeries::zero(trunc);
    for (size_t p = 0; p < pc.poles.size(); ++p) {
        auto [i, kk] = pole_key[p];
        std::vector<Rat> coef(pc.multiplicities[p], Rat(0));
        Rat jfact(1);
        for (int j = 0; j < pc.multiplicities[p]; ++j) {
            coef[j] = table.coeff[p][j] / jfact;
            jfact *= j + 1;
        }
        Poly poly(std::move(coef));
        exp_polys[i].push_back(poly);
        if (!poly.is_zero())
            exp_rem = exp_rem + poly.as_series(trunc) * gen_exp(pc.poles[p], trunc);
    }

    // Regroup: P_{i,j}(z) = sum_k [z^j] P^exp_{i,k}(z) * (1+z)^k.
    StaircaseSystem out;
    out.P.assign(omegas.size(), {});
    for (size_t i = 0; i < omegas.size(); ++i) {
        int top = idx.per_i[i].front().deg;
        for (int j = 0; j < rs[i]; ++j) {
            Poly pij;
            for (int kk = 0; kk <= top; ++kk) {
                const Rat& a = exp_polys[i][kk][j];
                if (a != 0) pij = pij + one_plus_z_pow(kk).scaled(a);
            }
            if (pij.degree() > idx.degree_bound(i, j))
                throw NormalityViolation("staircase_transform: degree bound violated");
            out.P[i].push_back(pij);
        }
    }

    out.exp_remainder = exp_rem;
    out.remainder = subst_T(exp_rem);
    auto ord = out.remainder.ord();
    if (!ord) throw InconclusiveTruncation("staircase_transform: remainder vanishes to truncation");
    if (*ord != target)
        throw NormalityViolation("staircase_transform: remainder order " + std::to_string(*ord) +
                                 " differs from expected " + std::to_string(target));
    out.certified_order = target;
    return out;
}

}  // namespace padelog

#endif
