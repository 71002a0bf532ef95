#ifndef PADELOG_PADE_EXP_HPP
#define PADELOG_PADE_EXP_HPP

#include <stdexcept>
#include <vector>

#include "padelog/polynomial.hpp"
#include "padelog/rational.hpp"
#include "padelog/series.hpp"

namespace padelog {

struct InconclusiveTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleConfig {
    std::vector<Rat> poles;
    std::vector<int> multiplicities;

    void validate() const {
        if (poles.size() != multiplicities.size())
            throw std::invalid_argument("PoleConfig: length mismatch");
        if (poles.empty()) throw std::invalid_argument("PoleConfig: no poles");
        for (int m : multiplicities)
            if (m < 1) throw std::invalid_argument("PoleConfig: multiplicity >= 1 required");
        for (size_t i = 0; i < poles.size(); ++i)
            for (size_t j = i + 1; j < poles.size(); ++j)
                if (poles[i] == poles[j]) throw std::invalid_argument("PoleConfig: duplicate pole");
    }
};

// coeff[h][j-1] is the coefficient of 1/(x - pole_h)^j, 1 <= j <= mult_h.
struct PartialFractionTable {
    std::vector<std::vector<Rat>> coeff;
};

// Decomposition of 1/prod (x - omega_i)^{m_i} by local Laurent expansion:
// around pole h, the remaining factors expand as a product of binomial-type
// series in t = x - omega_h, and the t^{m_h - j} coefficient is the weight of
// 1/(x - omega_h)^j.
inline PartialFractionTable partial_fractions(const PoleConfig& cfg) {
    cfg.validate();
    size_t np = cfg.poles.size();
    PartialFractionTable table;
    table.coeff.resize(np);
    for (size_t h = 0; h < np; ++h) {
        int mh = cfg.multiplicities[h];
        TruncSeries local = TruncSeries::one(mh - 1);
        for (size_t h2 = 0; h2 < np; ++h2) {
            if (h2 == h) continue;
            // (t + c)^{-m} = c^{-m} * sum_k C(-m,k) (t/c)^k with c = omega_h - omega_h2
            Rat c = cfg.poles[h] - cfg.poles[h2];
            int m2 = cfg.multiplicities[h2];
            TruncSeries factor = gen_binom(Rat(-m2), mh - 1);
            std::vector<Rat> f(factor.coeffs());
            Rat scale = pow_rat(c, -m2);
            Rat cpow(1);
            for (int k = 0; k <= mh - 1; ++k) {
                f[k] *= scale / cpow;
                cpow *= c;
            }
            local = local * TruncSeries(std::move(f));
        }
        table.coeff[h].resize(mh);
        for (int j = 1; j <= mh; ++j) table.coeff[h][j - 1] = local[mh - j];
    }
    return table;
}

/// Exact check that the table recombines to the constant polynomial 1.
inline bool verify_recombination(const PoleConfig& cfg, const PartialFractionTable& table) {
    size_t np = cfg.poles.size();
    Poly acc;
    for (size_t h = 0; h < np; ++h) {
        for (int j = 1; j <= cfg.multiplicities[h]; ++j) {
            if (table.coeff[h][j - 1] == 0) continue;
            Poly term = Poly::constant(table.coeff[h][j - 1]);
            for (size_t h2 = 0; h2 < np; ++h2) {
                int e = (h2 == h) ? cfg.multiplicities[h] - j : cfg.multiplicities[h2];
                term = term * linear_factor(cfg.poles[h2]).pow(e);
            }
            acc = acc + term;
        }
    }
    return acc == Poly::constant(Rat(1));
}

// Mahler's explicit Pade approximants of (e^{omega_0 z}, ..., e^{omega_n z}).
struct MahlerSystem {
    std::vector<Rat> omegas;
    std::vector<int> weights;            // r_h
    std::vector<Poly> approximants;      // deg <= r_h
    TruncSeries remainder;               // sum_h P_h(z) e^{omega_h z}
    int expected_order = 0;              // sum (r_h + 1) - 1
};

inline MahlerSystem mahler_approximants(const std::vector<Rat>& omegas,
                                        const std::vector<int>& weights, int trunc) {
    if (omegas.size() != weights.size())
        throw std::invalid_argument("mahler_approximants: length mismatch");
    PoleConfig cfg;
    cfg.poles = omegas;
    for (int r : weights) {
        if (r < 0) throw std::invalid_argument("mahler_approximants: negative weight");
        cfg.multiplicities.push_back(r + 1);
    }
    MahlerSystem sys;
    sys.omegas = omegas;
    sys.weights = weights;
    sys.expected_order = 0;
    for (int r : weights) sys.expected_order += r + 1;
    sys.expected_order -= 1;

    PartialFractionTable table = partial_fractions(cfg);
    TruncSeries rem = TruncSeries::zero(trunc);
    for (size_t h = 0; h < omegas.size(); ++h) {
        std::vector<Rat> pc(weights[h] + 1, Rat(0));
        Rat jfact(1);
        for (int j = 0; j <= weights[h]; ++j) {
            pc[j] = table.coeff[h][j] / jfact;  // p_{h,j+1} z^j / j!
            jfact *= j + 1;
        }
        Poly p(std::move(pc));
        sys.approximants.push_back(p);
        rem = rem + p.as_series(trunc) * gen_exp(omegas[h], trunc);
    }
    sys.remainder = rem;
    return sys;
}

/// Normality of the given index: remainder order exactly sum (r_h + 1) - 1.
inline bool check_perfectness(const std::vector<Rat>& omegas, const std::vector<int>& weights,
                              int trunc_margin = 3) {
    int expected = 0;
    for (int r : weights) expected += r + 1;
    expected -= 1;
    MahlerSystem sys = mahler_approximants(omegas, weights, expected + trunc_margin);
    auto ord = sys.remainder.ord();
    if (!ord) throw InconclusiveTruncation("check_perfectness: remainder vanishes to truncation");
    return *ord == expected;
}

}  // namespace padelog

#endif
