#pragma once

#include "quartic/classifier.hpp"
#include "quartic/forms.hpp"

#include <json.hpp>

#include <string>

namespace quartic {

// Documents are schema-versioned nlohmann objects with insertion order
// preserved, so serialization is byte-deterministic.
using Json = nlohmann::ordered_json;

inline constexpr const char* REPORT_SCHEMA = "quartic-report/1";

// {"num": "...", "den": "..."}; decimal strings, canonical form.
Json json_rat(const Rat& x);
Rat rat_from_json(const Json& j);

// json_rat payload, or the string "inf".
Json json_val(const ValOrInf& v);
ValOrInf val_from_json(const Json& j);

// Coefficient list of a homogeneous form, graded-lex largest first
// (15 slots for a quartic, 6 for a conic).
Json json_form_coeffs(const TernaryForm& F, int degree);
Json json_fiber_point(const FiberPoint& pt);

// kind "invariants": DO vector, discriminant, iota vector, rho conic.
Json invariants_report(const std::string& label, const TernaryForm& F);

// kind "classify". The certificate block carries every valuation used.
Json classify_report(const std::string& label, const TernaryForm& F,
                     const ReductionReport& r, bool with_hsop,
                     bool with_certificate);

// kind "picard".
Json picard_report_json(const Rat& a, const Rat& b, const Rat& c,
                        const PicardReport& r);

// Catalog payload {p, generic, entries}; embedded under "hsop" in classify
// documents, and wrapped with schema/kind by the hsop subcommand.
Json hsop_report(long p);

// kind "error": stable machine-readable failure object.
Json error_report(const std::string& label, const std::string& code,
                  const std::string& message);

// Plain-text rendering of any document: nested "key: value" lines with
// rationals shown as num/den.
std::string render_human(const Json& doc);

} // namespace quartic
