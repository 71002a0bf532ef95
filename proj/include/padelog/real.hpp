#ifndef PADELOG_REAL_HPP
#define PADELOG_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include "padelog/rational.hpp"

namespace padelog {

// Arbitrary-precision binary float for the closed-form constants. Default
// working precision is 192 bits; logs of exact integers/rationals enter at
// full working precision.
using Real = boost::multiprecision::mpfr_float;

inline void set_precision_bits(unsigned bits) {
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
    Real::default_precision(digits);
}

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned bits) : saved(Real::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
};

inline Real to_real(const Rat& q) { return Real(q.get_mpq_t()); }
inline Real to_real(const Int& n) { return Real(n.get_mpz_t()); }

inline Real log_rat(const Rat& q) {
    if (q <= 0) throw std::domain_error("log_rat: positive input required");
    return log(to_real(q));
}

inline Real log_int(const Int& n) {
    if (n <= 0) throw std::domain_error("log_int: positive input required");
    return log(to_real(n));
}

}  // namespace padelog

#endif
