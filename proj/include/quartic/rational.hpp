#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quartic {

using Rat = mpq_class;
using Int = mpz_class;

inline Int numerator(const Rat& x) { return x.get_num(); }
inline Int denominator(const Rat& x) { return x.get_den(); }

// x^e for integer e; e < 0 requires x != 0.
inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
    Rat base = neg ? Rat(1) / x : x;
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Int int_pow(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

inline Rat rat_from(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline std::string to_string(const Rat& x) { return x.get_str(); }

} // namespace quartic
