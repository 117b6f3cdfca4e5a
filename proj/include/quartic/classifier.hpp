#pragma once

#include "quartic/dixmier_ohno.hpp"
#include "quartic/hsop.hpp"
#include "quartic/iota.hpp"
#include "quartic/toggle.hpp"
#include "quartic/valuations.hpp"

#include <optional>
#include <string>

namespace quartic {

struct SingularCurve : std::domain_error {
    using std::domain_error::domain_error;
};

enum class ReductionType { GoodQuartic, GoodHyperelliptic, Bad, Unsupported };

const char* to_string(ReductionType t);

struct ReductionReport {
    ReductionType type = ReductionType::Bad;
    std::string unsupported_reason;  // stable token when type == Unsupported
    long p = 0;
    long content_shift = 0;          // input was scaled by p^(-content_shift)
    DixmierOhnoVector invariants;    // of the p-primitive rescale
    IotaVector iota;
    Rat d27;
    ValOrInf v_do_d27, v_do_i3, v_do_i27, v_iota_i42;
    bool good_quartic = false;
    bool hyperelliptic = false;
    bool toggle_locus = false;
    std::optional<FiberPoint> special_fiber;  // hyperelliptic case only
    std::vector<ValOrInf> do_valuations;      // 13 plain slot valuations
    std::vector<ValOrInf> iota_valuations;    // 7 plain slot valuations
};

// Potential good quartic reduction: the discriminant slot keeps valuation
// zero against the parameter catalog joined with the full invariant list.
bool good_quartic_test(const DixmierOhnoVector& inv, long p);

// Whether the invariants reduce, after unit normalization by I3, to the
// conic-square residue line (all twelve ratios match mod p and the
// discriminant ratio is positive). Requires the I3 slot minimal; throws
// otherwise, and for p in {2,3,5} where the residue line is not p-integral.
bool toggle_locus_test(const DixmierOhnoVector& inv, long p);

// Potential good hyperelliptic reduction for p outside {2,3,5,7}:
// v_DO(I3) = 0, v_DO(I27) > 0, v_iota(iota42) = 0.
bool hyperelliptic_test(const DixmierOhnoVector& inv, const IotaVector& io, long p);

ReductionReport classify(const TernaryForm& F, long p);

// The weighted point (iota6 : ... : iota21) in P(2,...,7) reduced mod p;
// only defined in the hyperelliptic case.
FiberPoint special_fiber_shioda(const TernaryForm& F, long p);

struct PicardReport {
    ReductionType type = ReductionType::Bad;
    long p = 0;
    Rat q2, q3, d6;
    ValOrInf v_a_term;  // v(2^3 * 3 * a)
    ValOrInf v_q2;
    Rat v_d6;
    bool ineq_a = false, ineq_q2 = false, ineq_p3 = true;
    std::optional<bool> corollary_good;  // min(6v(a),3v(c)) >= v(D6), p >= 5
    Rat stable_exponent;                 // v(D6)/36
    bool extension_required = false;     // exponent not an integer
};

// Valuation criterion for the Picard family x2^3 x3 = x1^4 + a x1^2 x3^2
// + b x1 x3^3 + c x3^4 (sign conventions of the closed forms): good quartic
// reduction at p iff 6 v(2^3*3*a) >= v(D6), 3 v(q2) >= v(27 D6), and at
// p = 3 additionally 3 v(a q3^3) >= 5 v(27 D6).
PicardReport picard_classify(const Rat& a, const Rat& b, const Rat& c, long p);

} // namespace quartic
