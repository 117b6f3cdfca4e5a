#include "quartic/report_json.hpp"

#include <sstream>

namespace quartic {

namespace {

Json json_named_rats(const char* const* names, const Rat* values, std::size_t n) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < n; ++i) obj[names[i]] = json_rat(values[i]);
    return obj;
}

Json json_named_vals(const char* const* names, const std::vector<ValOrInf>& values) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < values.size(); ++i) obj[names[i]] = json_val(values[i]);
    return obj;
}

} // namespace

Json json_rat(const Rat& x) {
    Json obj = Json::object();
    obj["num"] = numerator(x).get_str();
    obj["den"] = denominator(x).get_str();
    return obj;
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::domain_error("rat_from_json: {num, den} object expected");
    Int num(j["num"].get<std::string>());
    Int den(j["den"].get<std::string>());
    if (den == 0) throw std::domain_error("rat_from_json: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Json json_val(const ValOrInf& v) {
    if (v.inf) return Json("inf");
    return json_rat(v.v);
}

ValOrInf val_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ValOrInf::infinity();
    return ValOrInf::of(rat_from_json(j));
}

Json json_form_coeffs(const TernaryForm& F, int degree) {
    if (!F.homogeneous(degree))
        throw std::domain_error("json_form_coeffs: wrong degree");
    Json arr = Json::array();
    for (const auto& m : monomials3(degree)) arr.push_back(json_rat(F.coeff(m)));
    return arr;
}

Json json_fiber_point(const FiberPoint& pt) {
    Json obj = Json::object();
    obj["weights"] = pt.w;
    obj["lambda"] = json_val(pt.lambda);
    obj["integral"] = pt.integral;
    if (pt.integral) {
        Json res = Json::array();
        for (const auto& r : pt.residues) res.push_back(r.v);
        obj["residues"] = res;
    }
    obj["base"] = pt.base;
    Json ratios = Json::array();
    for (const auto& r : pt.ratios) ratios.push_back(r.v);
    obj["ratios"] = ratios;
    return obj;
}

Json invariants_report(const std::string& label, const TernaryForm& F) {
    DixmierOhnoVector inv = dixmier_ohno(F);
    IotaVector io = iota_invariants(inv);
    TernaryForm rho = rho_contravariant(F);

    Json doc = Json::object();
    doc["schema"] = REPORT_SCHEMA;
    doc["kind"] = "invariants";
    if (!label.empty()) doc["label"] = label;
    doc["curve"] = json_form_coeffs(F, 4);
    doc["dixmier_ohno"] = json_named_rats(DixmierOhnoVector::names().data(), inv.v.data(),
                                          DO_COUNT);
    doc["discriminant"] = json_rat(quartic_discriminant(inv));
    doc["iota"] = json_named_rats(IotaVector::names().data(), io.v.data(), IOTA_COUNT);
    doc["rho"] = json_form_coeffs(rho, 2);
    return doc;
}

Json classify_report(const std::string& label, const TernaryForm& F,
                     const ReductionReport& r, bool with_hsop,
                     bool with_certificate) {
    Json doc = Json::object();
    doc["schema"] = REPORT_SCHEMA;
    doc["kind"] = "classify";
    if (!label.empty()) doc["label"] = label;
    doc["p"] = r.p;
    doc["type"] = to_string(r.type);
    if (r.type == ReductionType::Unsupported)
        doc["unsupported_reason"] = r.unsupported_reason;
    doc["content_shift"] = r.content_shift;
    doc["v_do_discriminant"] = json_val(r.v_do_d27);
    doc["v_do_I3"] = json_val(r.v_do_i3);
    doc["v_do_I27"] = json_val(r.v_do_i27);
    doc["v_iota_iota42"] = json_val(r.v_iota_i42);
    doc["good_quartic"] = r.good_quartic;
    doc["hyperelliptic"] = r.hyperelliptic;
    doc["toggle_locus"] = r.toggle_locus;
    if (r.special_fiber) doc["special_fiber"] = json_fiber_point(*r.special_fiber);
    if (with_hsop && r.p != 2 && r.p != 3) doc["hsop"] = hsop_report(r.p);
    if (with_certificate) {
        Json cert = Json::object();
        cert["curve"] = json_form_coeffs(F, 4);
        cert["dixmier_ohno"] = json_named_rats(DixmierOhnoVector::names().data(),
                                               r.invariants.v.data(), DO_COUNT);
        cert["discriminant"] = json_rat(r.d27);
        cert["iota"] = json_named_rats(IotaVector::names().data(), r.iota.v.data(),
                                       IOTA_COUNT);
        cert["do_valuations"] = json_named_vals(DixmierOhnoVector::names().data(),
                                                r.do_valuations);
        cert["iota_valuations"] = json_named_vals(IotaVector::names().data(),
                                                  r.iota_valuations);
        doc["certificate"] = cert;
    }
    return doc;
}

Json picard_report_json(const Rat& a, const Rat& b, const Rat& c,
                        const PicardReport& r) {
    Json doc = Json::object();
    doc["schema"] = REPORT_SCHEMA;
    doc["kind"] = "picard";
    doc["p"] = r.p;
    doc["a"] = json_rat(a);
    doc["b"] = json_rat(b);
    doc["c"] = json_rat(c);
    doc["type"] = to_string(r.type);
    doc["q2"] = json_rat(r.q2);
    doc["q3"] = json_rat(r.q3);
    doc["d6"] = json_rat(r.d6);
    doc["v_d6"] = json_rat(r.v_d6);
    doc["v_a_term"] = json_val(r.v_a_term);
    doc["v_q2"] = json_val(r.v_q2);
    doc["ineq_a"] = r.ineq_a;
    doc["ineq_q2"] = r.ineq_q2;
    doc["ineq_p3"] = r.ineq_p3;
    if (r.corollary_good) doc["corollary_good"] = *r.corollary_good;
    doc["stable_exponent"] = json_rat(r.stable_exponent);
    doc["extension_required"] = r.extension_required;
    return doc;
}

Json hsop_report(long p) {
    HsopCatalog cat = hsop_catalog(p);
    Json doc = Json::object();
    doc["p"] = p;
    doc["generic"] = cat.p == 0;
    Json entries = Json::array();
    for (const auto& e : cat.entries) {
        Json item = Json::object();
        item["label"] = e.label;
        item["weight"] = e.weight;
        entries.push_back(item);
    }
    doc["entries"] = entries;
    return doc;
}

Json error_report(const std::string& label, const std::string& code,
                  const std::string& message) {
    Json doc = Json::object();
    doc["schema"] = REPORT_SCHEMA;
    doc["kind"] = "error";
    if (!label.empty()) doc["label"] = label;
    doc["code"] = code;
    doc["message"] = message;
    return doc;
}

namespace {

bool is_rat_object(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den");
}

std::string scalar_text(const Json& j) {
    if (is_rat_object(j)) {
        std::string num = j["num"].get<std::string>();
        std::string den = j["den"].get<std::string>();
        return den == "1" ? num : num + "/" + den;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool is_scalar(const Json& j) {
    return is_rat_object(j) || !(j.is_object() || j.is_array());
}

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (is_scalar(v)) {
                out << indent << it.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array()) {
                bool flat = true;
                for (const auto& e : v)
                    if (!is_scalar(e)) flat = false;
                if (flat) {
                    out << indent << it.key() << ": [";
                    for (std::size_t i = 0; i < v.size(); ++i)
                        out << (i ? ", " : "") << scalar_text(v[i]);
                    out << "]\n";
                } else {
                    out << indent << it.key() << ":\n";
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        out << indent << "  - item " << i << "\n";
                        render(v[i], indent + "    ", out);
                    }
                }
            } else {
                out << indent << it.key() << ":\n";
                render(v, indent + "  ", out);
            }
        }
    } else {
        out << indent << scalar_text(j) << "\n";
    }
}

} // namespace

std::string render_human(const Json& doc) {
    std::ostringstream out;
    render(doc, "", out);
    return out.str();
}

} // namespace quartic
