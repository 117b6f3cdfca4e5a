#pragma once

#include "quartic/forms.hpp"

#include <cstdint>
#include <stdexcept>

namespace quartic {

struct NegativeValuation : std::domain_error {
    using std::domain_error::domain_error;
};

// Element of F_p. A default-constructed element is the zero of an
// unspecified field (p = 0) and combines with any modulus; this keeps
// container code simple.
struct PrimeFieldElement {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    PrimeFieldElement() = default;
    PrimeFieldElement(std::uint64_t value, std::uint64_t prime)
        : v(prime ? value % prime : 0), p(prime) {}

    static std::uint64_t join(std::uint64_t a, std::uint64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw std::logic_error("prime field mismatch");
        return a;
    }

    PrimeFieldElement operator+(const PrimeFieldElement& o) const {
        std::uint64_t q = join(p, o.p);
        if (q == 0) return {};
        return {(v + o.v) % q, q};
    }
    PrimeFieldElement operator-() const {
        if (p == 0) return {};
        return {v ? p - v : 0, p};
    }
    PrimeFieldElement operator-(const PrimeFieldElement& o) const { return *this + (-o); }
    PrimeFieldElement operator*(const PrimeFieldElement& o) const {
        std::uint64_t q = join(p, o.p);
        if (q == 0 || v == 0 || o.v == 0) return {0, q};
        return {static_cast<std::uint64_t>(
                    static_cast<unsigned __int128>(v) * o.v % q), q};
    }
    PrimeFieldElement inv() const;
    PrimeFieldElement operator/(const PrimeFieldElement& o) const { return *this * o.inv(); }
    PrimeFieldElement pow(std::uint64_t e) const;

    bool operator==(const PrimeFieldElement& o) const {
        if (v == 0 && o.v == 0) return true;
        return v == o.v && join(p, o.p) != 0;
    }
};

using Fp = PrimeFieldElement;

inline bool is_zero(const Fp& x) { return x.v == 0; }

inline Fp operator*(const Fp& a, long s) {
    if (a.p == 0) return {};
    std::uint64_t m = static_cast<std::uint64_t>(((s % static_cast<long>(a.p)) +
                                                  static_cast<long>(a.p)) %
                                                 static_cast<long>(a.p));
    return a * Fp{m, a.p};
}

// Reduction of a rational with nonnegative p-valuation; throws otherwise.
Fp reduce_mod_p(const Rat& x, std::uint64_t p);
inline Fp operator*(const Fp& a, const Rat& s) {
    if (a.p == 0) return {};
    return a * reduce_mod_p(s, a.p);
}

TernaryFormT<Fp> reduce_mod_p(const TernaryForm& F, std::uint64_t p);
BinaryFormT<Fp> reduce_mod_p(const BinaryForm& f, std::uint64_t p);

// Integer lift with coefficients in [0, p).
TernaryForm lift_mod_p(const TernaryFormT<Fp>& F);
BinaryForm lift_mod_p(const BinaryFormT<Fp>& f);

} // namespace quartic
