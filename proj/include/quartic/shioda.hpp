#pragma once

#include "quartic/forms.hpp"

#include <array>
#include <cassert>
#include <cstddef>
#include <stdexcept>

namespace quartic {

inline constexpr std::size_t SHIODA_COUNT = 9;

template <class C>
struct ShiodaVectorT {
    std::array<C, SHIODA_COUNT> v{};

    static const std::array<const char*, SHIODA_COUNT>& names() {
        static const std::array<const char*, SHIODA_COUNT> n = {
            "j2", "j3", "j4", "j5", "j6", "j7", "j8", "j9", "j10"};
        return n;
    }
    static const std::array<int, SHIODA_COUNT>& weights() {
        static const std::array<int, SHIODA_COUNT> w = {2, 3, 4, 5, 6, 7, 8, 9, 10};
        return w;
    }

    C& operator[](std::size_t i) { return v[i]; }
    const C& operator[](std::size_t i) const { return v[i]; }
    bool operator==(const ShiodaVectorT& o) const { return v == o.v; }
};

using ShiodaVector = ShiodaVectorT<Rat>;

// The nine generators j2..j10 for binary octics, from the transvectant
// chain g=(f,f)4, k=(f,f)6, h=(k,k)2, m=(f,k)4, n=(f,h)4, p=(g,k)4,
// q=(g,h)4. All slots except j7 are single transvectant scalars; j7 is a
// fixed mixture of (m,h)4 with lower products.
template <class C>
ShiodaVectorT<C> shioda(const BinaryFormT<C>& f) {
    if (f.degree() != 8) throw std::domain_error("shioda: octic expected");
    auto g = transvectant(f, f, 4);
    auto k = transvectant(f, f, 6);
    auto h = transvectant(k, k, 2);
    auto m = transvectant(f, k, 4);
    auto n = transvectant(f, h, 4);
    auto p = transvectant(g, k, 4);
    auto q = transvectant(g, h, 4);
    auto sc = [](const BinaryFormT<C>& a) {
        assert(a.degree() == 0);
        return a[0];
    };
    C J2 = sc(transvectant(f, f, 8));
    C J3 = sc(transvectant(f, g, 8));
    C J4 = sc(transvectant(k, k, 4));
    C J5 = sc(transvectant(m, k, 4));
    C J6 = sc(transvectant(k, h, 4));
    C J7 = sc(transvectant(m, h, 4));
    C J8 = sc(transvectant(p, h, 4));
    C J9 = sc(transvectant(n, h, 4));
    C J10 = sc(transvectant(q, h, 4));
    C j7 = J2 * J2 * J3 * Rat(327679999, 1734082560)
         + J3 * J4 * Rat(-4259839987, 5898240000)
         + J2 * J5 * Rat(-5570559983, 27525120000)
         + J7 * Rat(1, 327680000);
    return {{J2, J3, J4, J5, J6, j7, J8, J9, J10}};
}

struct BinaryQuarticInvariants {
    Rat q2, q3, d6;
};

// Invariants of x^4 + a x^2 z^2 + b x z^3 + c z^4: q2 = a^2 + 12c,
// q3 = -2a^3 + 72ac - 27b^2, and 27 d6 = 4 q2^3 - q3^2.
BinaryQuarticInvariants binary_quartic_invariants(const BinaryForm& q);

// Discriminant D14 of a binary octic; computed from the formal-degree
// resultant of the partials, so vanishing leading coefficients are fine.
Rat binary_octic_discriminant(const BinaryForm& f);

} // namespace quartic
