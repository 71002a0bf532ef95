#ifndef PADELOG_NUMBER_THEORY_HPP
#define PADELOG_NUMBER_THEORY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "padelog/rational.hpp"

namespace padelog {

/// den(S): least n >= 1 with n*s integral for every s in S.
inline Int den_of_set(const std::vector<Rat>& s) {
    if (s.empty()) throw std::invalid_argument("den_of_set: empty set");
    Int l = 1;
    for (const auto& q : s) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

/// Rising factorial (omega)_k = omega (omega+1) ... (omega+k-1).
inline Rat pochhammer(const Rat& omega, unsigned long k) {
    Rat out(1);
    Rat t = omega;
    for (unsigned long i = 0; i < k; ++i) {
        out *= t;
        t += 1;
    }
    return out;
}

/// lcm(1..n).
inline Int d_lcm(unsigned long n) {
    if (n < 1) throw std::invalid_argument("d_lcm: n >= 1 required");
    Int l = 1;
    for (unsigned long i = 2; i <= n; ++i) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), i);
    return l;
}

/// D_n(omega) = den{ k!/(omega)_k : 0 <= k <= n }.
inline Int big_D(const Rat& omega, unsigned long n) {
    if (is_nonpositive_integer(omega))
        throw std::domain_error("big_D: omega is a nonpositive integer (Pochhammer pole)");
    std::vector<Rat> vals;
    Rat poch(1);
    Rat shift = omega;
    vals.push_back(Rat(1));
    for (unsigned long k = 1; k <= n; ++k) {
        poch *= shift;
        shift += 1;
        vals.push_back(Rat(factorial(k)) / poch);
    }
    return den_of_set(vals);
}

/// d_n(omega) = den{ 1/omega, ..., 1/(omega+n-1) }.
inline Int small_d(const Rat& omega, unsigned long n) {
    std::vector<Rat> vals;
    Rat shift = omega;
    for (unsigned long k = 0; k < n; ++k) {
        if (shift == 0) throw std::domain_error("small_d: omega + k vanishes");
        vals.push_back(1 / shift);
        shift += 1;
    }
    return den_of_set(vals);
}

inline unsigned long euler_phi(unsigned long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n >= 1 required");
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::map<Int, unsigned long> factorize(Int n) {
    if (n < 1) throw std::invalid_argument("factorize: positive input required");
    std::map<Int, unsigned long> out;
    Int p = 2;
    while (p * p <= n) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            n /= p;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    if (n > 1) ++out[n];
    return out;
}

struct PlaceSpec {
    enum class Kind { archimedean, finite } kind = Kind::archimedean;
    Int prime = 0;  // set when finite
    // Local-degree ratio [K_v:R]/[K:Q] resp. [K_v:Q_p]/[K:Q]; always 1 over Q.
    Rat degree_ratio{1};

    int epsilon() const { return kind == Kind::archimedean ? 1 : 0; }

    static PlaceSpec infinite_place() { return PlaceSpec{}; }
    static PlaceSpec finite_place(const Int& p) {
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
            throw std::invalid_argument("PlaceSpec: p must be prime");
        return PlaceSpec{Kind::finite, p, Rat(1)};
    }
};

// Heights kept as exact integer data; logs are taken by the caller so that
// the product-formula identity can be tested symbolically.
struct HeightProfile {
    Rat alpha;
    Int h_total_arg;                        // h(alpha) = log max(|num|, den)
    Rat h_inf_ratio;                        // h_inf(alpha) = log of this; max(1,|alpha|)
    std::map<Int, unsigned long> den_fact;  // h_p = e * log p per prime p^e || den
};

inline HeightProfile heights(const Rat& alpha) {
    if (alpha == 0) throw std::invalid_argument("heights: zero input");
    HeightProfile hp;
    hp.alpha = alpha;
    Int num = abs(alpha.get_num());
    Int d = alpha.get_den();
    hp.h_total_arg = num > d ? num : d;
    hp.h_inf_ratio = abs_rat(alpha) > 1 ? abs_rat(alpha) : Rat(1);
    hp.den_fact = d == 1 ? std::map<Int, unsigned long>{} : factorize(d);
    return hp;
}

}  // namespace padelog

#endif
