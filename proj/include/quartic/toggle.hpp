#pragma once

#include "quartic/conic.hpp"
#include "quartic/forms.hpp"
#include "quartic/fp.hpp"
#include "quartic/valuations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quartic {

// The fixed conic x2^2 - 4 x1 x3 stabilized by the image of h_embed.
const TernaryForm& q0_conic();

// F(x^2, 2xz, z^2): sends quartic ternary forms to binary octics. The
// kernel is exactly the multiples of the fixed conic.
template <class C>
BinaryFormT<C> b8(const TernaryFormT<C>& F) {
    if (!F.homogeneous(4))
        throw std::domain_error("b8: homogeneous quartic expected");
    BinaryFormT<C> out(8);
    for (auto& [m, c] : F.terms()) {
        long w = 1;
        for (int t = 0; t < m[1]; ++t) w *= 2;
        out[m[1] + 2 * m[2]] = out[m[1] + 2 * m[2]] + c * w;
    }
    return out;
}

// [[a^2, 2ab, b^2], [ac, ad+bc, bd], [c^2, 2cd, d^2]]; determinant is
// det(T)^3. The matrix is written for right substitution x -> x h(T), so
// with the column-substitution act() the identities read
//   act(Q0, h(T)^t) = Q0                       for det T = 1,
//   b8(act(F, h(T)^t)) = act(b8(F), T^t)       for every T.
LinearMap3 h_embed(const LinearMap2& T);

// F = Q^2 + p^s G after the recorded rescale: mu * F(T x) = Q^2 + p^s G,
// with G p-integral and nonzero mod p. When conic_normalized is set, Q
// reduces to the fixed conic mod p.
struct ToggleModel {
    TernaryForm Q;
    long s = 0;
    TernaryForm G;
    long p = 0;
    bool conic_normalized = false;
    Rat mu = Rat(1);
    LinearMap3 T = LinearMap3::identity();
};

struct SpecialFiber {
    BinaryFormT<Fp> octic;       // reduction of b8(G); fiber equation y^2 = octic
    bool distinct_roots = false; // D14 of the octic is nonzero mod p
};

struct CongruenceLine {
    std::string label;  // "j2".."j7", "D14"
    ValOrInf lhs;       // v_p of the congruence difference
    Rat bound;          // required lower bound
    bool ok = false;
};

struct CongruenceReport {
    long p = 0, s = 0;
    std::vector<CongruenceLine> lines;
    bool all_ok = true;
};

// Greedy maximal decomposition F = Q^2 + p^s G at an odd prime p for
// p-integral, p-primitive F. Returns nothing when the reduction is not a
// nondegenerate conic square (or F is singular). The conic is moved onto
// the fixed one by an exact monomial substitution when the support allows;
// otherwise the decomposition is returned with conic_normalized = false.
std::optional<ToggleModel> detect_toggle(const TernaryForm& F, long p);

// Special fiber of a normalized model: the octic b8(G) mod p and whether
// it has eight distinct roots.
SpecialFiber good_toggle_check(const ToggleModel& m);

// Exact congruence margins between p^(si) j_i(b8(G)) and iota_3i(Q0^2+p^s G)
// for i = 2..7 (bound s(i+1)) and between p^(14s) D14(b8(G)) and iota42
// (bound 15s).
CongruenceReport congruence_suite(const ToggleModel& m);

} // namespace quartic
