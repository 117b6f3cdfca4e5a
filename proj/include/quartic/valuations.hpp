#pragma once

#include "quartic/fp.hpp"
#include "quartic/rational.hpp"

#include <vector>

namespace quartic {

// A p-adic valuation, possibly infinite (the valuation of 0). Finite values
// are rationals because weighted slopes v/weight are first-class here.
struct ValOrInf {
    bool inf = false;
    Rat v;

    static ValOrInf infinity() { return {true, Rat(0)}; }
    static ValOrInf of(Rat x) { return {false, std::move(x)}; }

    bool operator==(const ValOrInf& o) const {
        return inf == o.inf && (inf || v == o.v);
    }
    bool operator<(const ValOrInf& o) const {
        if (inf) return false;
        if (o.inf) return true;
        return v < o.v;
    }
};

// Exact p-adic valuation of a rational.
ValOrInf val_p(const Rat& x, long p);
// The integer e with x = p^e * unit; throws on x = 0.
long val_p_int(const Rat& x, long p);

// A tuple of invariant values with their weights, viewed as a point of the
// corresponding weighted projective space over Q.
struct WeightedRatPoint {
    std::vector<Rat> x;
    std::vector<int> w;
};

// min over slots of v_p(x_i) / w_i.
ValOrInf min_slope(const WeightedRatPoint& pt, long p);

// Valuation of a weight-e quantity y against a normalizing list: slope of y
// minus the minimum slope of the list and y together. Zero means y stays a
// unit after the point is scaled to integral non-degenerate position.
ValOrInf normalized_valuation(const WeightedRatPoint& list, const Rat& y,
                              int y_weight, long p);

// Reduction of a weighted point modulo p. When the minimal slope lambda has
// lambda * w_i integral for every slot, the canonical rescale by p^lambda
// gives per-slot residues. The degree-0 normal form (always available when
// some slot is nonzero) takes the lowest-index minimal slot b as base and
// stores the residues of x_i^(L/w_i) * x_b^(-L/w_b), L = lcm of weights;
// these are invariant under the weighted unit action.
struct FiberPoint {
    std::vector<int> w;
    ValOrInf lambda;
    bool integral = false;
    std::vector<Fp> residues;  // only when integral
    int base = -1;             // -1 when the point is identically zero
    std::vector<Fp> ratios;
};

FiberPoint weighted_point_mod_p(const WeightedRatPoint& pt, long p);

// The same structure for a point already given over F_p (lambda = 0).
FiberPoint weighted_point_from_fp(const std::vector<Fp>& values,
                                  const std::vector<int>& weights);

// Equality in weighted projective space over F_p, decided on the degree-0
// normal forms.
bool same_projective_point(const FiberPoint& a, const FiberPoint& b);

// Stronger check for residue tuples: equality up to the unit action
// r_i -> u^(w_i) r_i. Requires both sides integral.
bool residues_match_up_to_unit(const FiberPoint& a, const FiberPoint& b);

} // namespace quartic
