#ifndef PADELOG_RATIONAL_HPP
#define PADELOG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padelog {

// Universal exact scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the BigRational contract.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_nonpositive_integer(const Rat& q) {
    return is_integer(q) && q.get_num() <= 0;
}

/// Serialized form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q", plain integers, and "1eK" / "-1eK" sugar for powers of ten.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos && s.find('/') == std::string::npos) {
        std::string mant = s.substr(0, epos);
        std::string expo = s.substr(epos + 1);
        long e = std::stol(expo);
        if (e < 0) throw std::invalid_argument("parse_rat: negative exponent not supported");
        Int m(mant);
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
        return Rat(m * p);
    }
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
}

/// p-adic valuation of a nonzero rational.
inline long valuation(const Rat& q, const Int& p) {
    if (q == 0) throw std::invalid_argument("valuation: zero input");
    long v = 0;
    Int n = q.get_num();
    Int d = q.get_den();
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        d /= p;
        --v;
    }
    return v;
}

inline Rat abs_rat(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("pow_rat: zero to negative power");
        return make_rat(pow_int(base.get_den(), static_cast<unsigned long>(-e)),
                        pow_int(base.get_num(), static_cast<unsigned long>(-e)));
    }
    return make_rat(pow_int(base.get_num(), static_cast<unsigned long>(e)),
                    pow_int(base.get_den(), static_cast<unsigned long>(e)));
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace padelog

#endif
