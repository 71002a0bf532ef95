#ifndef PADELOG_POLYNOMIAL_HPP
#define PADELOG_POLYNOMIAL_HPP

#include <stdexcept>
#include <vector>

#include "padelog/rational.hpp"
#include "padelog/series.hpp"

namespace padelog {

// Dense polynomial over Rat in the monomial basis. Unlike TruncSeries, no
// truncation: products grow degrees exactly.
class Poly {
  public:
    Poly() : coeffs_(1, Rat(0)) {}
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Rat(0));
        normalize();
    }
    static Poly constant(const Rat& a) { return Poly({a}); }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
    /// Degree of the zero polynomial reported as -1.
    int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    const Rat& operator[](int k) const {
        static const Rat zero(0);
        return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : zero;
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
        for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
        for (size_t k = 0; k < o.coeffs_.size(); ++k) c[k] -= o.coeffs_[k];
        return Poly(std::move(c));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return Poly(std::move(c));
    }
    Poly scaled(const Rat& a) const {
        std::vector<Rat> c(coeffs_);
        for (auto& x : c) x *= a;
        return Poly(std::move(c));
    }
    Poly pow(unsigned e) const {
        Poly out = constant(Rat(1));
        for (unsigned i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) acc = acc * x + coeffs_[k];
        return acc;
    }

    TruncSeries as_series(int trunc) const {
        std::vector<Rat> c(trunc + 1, Rat(0));
        for (size_t k = 0; k < coeffs_.size() && k <= static_cast<size_t>(trunc); ++k)
            c[k] = coeffs_[k];
        return TruncSeries(std::move(c));
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void normalize() {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

/// (x - a).
inline Poly linear_factor(const Rat& a) { return Poly({-a, Rat(1)}); }

/// (1+z)^h expanded into the monomial basis.
inline Poly one_plus_z_pow(unsigned h) {
    std::vector<Rat> c(h + 1);
    for (unsigned k = 0; k <= h; ++k) c[k] = Rat(binomial_int(h, k));
    return Poly(std::move(c));
}

}  // namespace padelog

#endif
