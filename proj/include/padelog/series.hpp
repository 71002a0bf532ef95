#ifndef PADELOG_SERIES_HPP
#define PADELOG_SERIES_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "padelog/number_theory.hpp"
#include "padelog/rational.hpp"

namespace padelog {

// Truncated formal power series over Rat. Coefficients are known exactly for
// indices 0..trunc_order(); nothing is claimed beyond that. Binary operations
// truncate to the shorter operand.
class TruncSeries {
  public:
    TruncSeries() : coeffs_(1, Rat(0)) {}
    explicit TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: need at least one coefficient");
    }

    static TruncSeries zero(int trunc) { return TruncSeries(std::vector<Rat>(trunc + 1, Rat(0))); }
    static TruncSeries one(int trunc) {
        std::vector<Rat> c(trunc + 1, Rat(0));
        c[0] = 1;
        return TruncSeries(std::move(c));
    }
    static TruncSeries identity(int trunc) {  // the series z
        std::vector<Rat> c(trunc + 1, Rat(0));
        if (trunc >= 1) c[1] = 1;
        return TruncSeries(std::move(c));
    }

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int k) const { return coeffs_.at(k); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Least index with nonzero coefficient; nullopt means ord >= trunc_order()+1.
    std::optional<int> ord() const {
        for (int k = 0; k <= trunc_order(); ++k)
            if (coeffs_[k] != 0) return k;
        return std::nullopt;
    }

    TruncSeries truncated(int n) const {
        if (n >= trunc_order()) return *this;
        return TruncSeries(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    TruncSeries operator+(const TruncSeries& o) const {
        int n = std::min(trunc_order(), o.trunc_order());
        std::vector<Rat> c(n + 1);
        for (int k = 0; k <= n; ++k) c[k] = coeffs_[k] + o.coeffs_[k];
        return TruncSeries(std::move(c));
    }

    TruncSeries operator-(const TruncSeries& o) const {
        int n = std::min(trunc_order(), o.trunc_order());
        std::vector<Rat> c(n + 1);
        for (int k = 0; k <= n; ++k) c[k] = coeffs_[k] - o.coeffs_[k];
        return TruncSeries(std::move(c));
    }

    TruncSeries operator*(const TruncSeries& o) const {
        int n = std::min(trunc_order(), o.trunc_order());
        std::vector<Rat> c(n + 1, Rat(0));
        for (int i = 0; i <= n; ++i) {
            if (coeffs_[i] == 0) continue;
            for (int j = 0; j + i <= n; ++j)
                if (o.coeffs_[j] != 0) c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return TruncSeries(std::move(c));
    }

    TruncSeries scaled(const Rat& a) const {
        std::vector<Rat> c(coeffs_);
        for (auto& x : c) x *= a;
        return TruncSeries(std::move(c));
    }

    TruncSeries pow(unsigned j) const {
        TruncSeries out = one(trunc_order());
        for (unsigned i = 0; i < j; ++i) out = out * *this;
        return out;
    }

    /// Exact evaluation of the stored partial sum at a rational point.
    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int k = trunc_order(); k >= 0; --k) acc = acc * x + coeffs_[k];
        return acc;
    }

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

  private:
    std::vector<Rat> coeffs_;
};

inline TruncSeries gen_exp(const Rat& omega, int trunc) {
    std::vector<Rat> c(trunc + 1);
    c[0] = 1;
    for (int k = 1; k <= trunc; ++k) c[k] = c[k - 1] * omega / k;
    return TruncSeries(std::move(c));
}

inline TruncSeries gen_log1p(int trunc) {
    std::vector<Rat> c(trunc + 1, Rat(0));
    for (int k = 1; k <= trunc; ++k) c[k] = make_rat(k % 2 == 1 ? 1 : -1, k);
    return TruncSeries(std::move(c));
}

/// (1+z)^omega: coefficient k is the generalized binomial coefficient C(omega, k).
inline TruncSeries gen_binom(const Rat& omega, int trunc) {
    std::vector<Rat> c(trunc + 1);
    c[0] = 1;
    for (int k = 1; k <= trunc; ++k) c[k] = c[k - 1] * (omega - (k - 1)) / k;
    return TruncSeries(std::move(c));
}

// Composition f(g) for g with g(0) = 0, by Horner evaluation over truncated
// series. O(N^3) scalar multiplications; fine at the grid sizes in use.
inline TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    if (g[0] != 0) throw std::invalid_argument("compose: inner series must vanish at 0");
    int n = std::min(f.trunc_order(), g.trunc_order());
    TruncSeries acc = TruncSeries::zero(n);
    TruncSeries gt = g.truncated(n);
    for (int k = n; k >= 0; --k) {
        acc = acc * gt;
        std::vector<Rat> c(acc.coeffs());
        c[0] += f[k];
        acc = TruncSeries(std::move(c));
    }
    return acc;
}

/// T: f(z) -> f(log(1+z)); order preserving.
inline TruncSeries subst_T(const TruncSeries& f) {
    return compose(f, gen_log1p(f.trunc_order()));
}

/// T^-1: g(z) -> g(e^z - 1).
inline TruncSeries subst_T_inv(const TruncSeries& g) {
    TruncSeries em1 = gen_exp(Rat(1), g.trunc_order()) - TruncSeries::one(g.trunc_order());
    return compose(g, em1);
}

}  // namespace padelog

#endif
