#pragma once

#include "quartic/forms.hpp"

#include <array>
#include <cstddef>

namespace quartic {

// The thirteen generators in catalog order.
inline constexpr std::size_t DO_COUNT = 13;

struct DixmierOhnoVector {
    std::array<Rat, DO_COUNT> v{};

    static const std::array<const char*, DO_COUNT>& names();    // I3 ... I27
    static const std::array<int, DO_COUNT>& weights();          // 3 ... 27

    Rat& operator[](std::size_t i) { return v[i]; }
    const Rat& operator[](std::size_t i) const { return v[i]; }
    bool operator==(const DixmierOhnoVector& o) const { return v == o.v; }
};

// Invariants of a plane quartic; throws std::domain_error unless F is
// homogeneous of degree 4.
DixmierOhnoVector dixmier_ohno(const TernaryForm& F);

// Discriminant, 2^40 times the I27 slot; zero exactly on singular quartics.
Rat quartic_discriminant(const DixmierOhnoVector& inv);
Rat quartic_discriminant(const TernaryForm& F);

// Quadric contravariant of the quartic, written in the dual coordinates
// (so TernaryForm slots are u1, u2, u3). Transforms by F(Tx) -> det(T)^6 *
// rho(F) evaluated at T^t u.
TernaryForm rho_contravariant(const TernaryForm& F);

// Closed forms of the invariants of Q^2 for a conic Q: each slot is a fixed
// rational multiple of a power of I3(Q^2) = 5/36 * D3(Q)^2, and I27 = 0.
DixmierOhnoVector conic_square_invariants(const TernaryForm& Q);

// The per-slot constants of that closed form, in catalog order.
const std::array<Rat, DO_COUNT>& conic_square_residues();

} // namespace quartic
