// Acceptance gate: one criterion per invocation, selected by number.
// Prints exactly one [PASS]/[FAIL] line; exit status follows it.

#include "quartic/classifier.hpp"
#include "quartic/parse.hpp"
#include "quartic/report_json.hpp"
#include "quartic/shioda.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace quartic;
using namespace quartic::testsupport;

namespace {

struct Context {
    std::string cli;   // path to the command line binary
    std::string data;  // path to the data directory
};

// failure detail, empty on success
using Result = std::string;

TernaryForm regression_quartic() {
    return q(
        "(y+z)*x^3 - (2*y^2+z*y)*x^2 + (y^3-z*y^2+2*z^2*y-z^3)*x"
        " - 2*z^2*y^2 + 3*z^3*y");
}

TernaryForm kollar_form() {
    return q0_conic() * q0_conic()
         + (q("x^4") + q("z^4")) * rat_pow(Rat(11), 4);
}

TernaryForm picard_form(const Rat& a, const Rat& b, const Rat& c) {
    return q("-y^3*z + x^4") + q("x^2*z^2") * a + q("x*z^3") * b + q("z^4") * c;
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

Result criterion_conic_square(const Context&) {
    TernaryForm Q0 = q0_conic();
    DixmierOhnoVector base = dixmier_ohno(Q0 * Q0);
    if (base[0] != Rat(320, 9)) return "I3 of the squared reference conic is not 320/9";

    Rng rng(1001);
    for (int t = 0; t < 100; ++t) {
        TernaryForm Q = random_conic(rng, -9, 9, 3);
        DixmierOhnoVector got = dixmier_ohno(Q * Q);
        DixmierOhnoVector want = conic_square_invariants(Q);
        for (std::size_t i = 0; i < DO_COUNT; ++i)
            if (got[i] != want[i])
                return "closed form mismatch in slot " +
                       std::string(DixmierOhnoVector::names()[i]) + " at trial " +
                       std::to_string(t);
        Rat d3 = conic_d3(Q);
        if (got[0] != d3 * d3 * Rat(5, 36))
            return "I3 is not 5/36 D3^2 at trial " + std::to_string(t);
    }
    return {};
}

Result criterion_rho(const Context&) {
    TernaryForm rho0 = rho_contravariant(q0_conic() * q0_conic());
    TernaryForm want = q("-143360/9 * y^2 + 143360/9 * x*z");
    if (!(rho0 == want)) return "rho of the squared reference conic is off";
    if (!rho_contravariant(q("x^3*y + y^3*z + z^3*x")).zero())
        return "rho of the Klein quartic is not zero";

    Rng rng(1002);
    for (int t = 0; t < 50; ++t) {
        TernaryForm F = random_quartic(rng, -4, 4);
        LinearMap3 T = t % 2 ? random_gl3(rng) : random_sl3(rng);
        TernaryForm lhs = rho_contravariant(act(F, T));
        TernaryForm rhs = act(rho_contravariant(F), T.inverse().transpose())
                        * rat_pow(T.det(), 6);
        if (!(lhs == rhs)) return "equivariance fails at trial " + std::to_string(t);
    }
    return {};
}

Result criterion_picard_forms(const Context&) {
    Rng rng(1003);
    for (int t = 0; t < 200; ++t) {
        Rat a = rng.rat(-9, 9, 2), b = rng.rat(-9, 9, 2), c = rng.rat(-9, 9, 2);
        DixmierOhnoVector inv = dixmier_ohno(picard_form(a, b, c));
        Rat q2 = a * a + c * 12;
        Rat q3 = a * a * a * -2 + a * c * 72 - b * b * 27;
        Rat d6 = (rat_pow(q2, 3) * 4 - q3 * q3) / 27;
        Rat p12 = rat_pow(Rat(2), 12), p23 = rat_pow(Rat(2), 23);
        bool ok = inv[2] == (a * q3 * 8 + q2 * q2 * 81) / (p12 * 81)
               && inv[3] == (a * q3 * 16 + q2 * q2 * 27) / (p12 * 81)
               && inv[8] == (a * a * rat_pow(q2, 3) * 108 + a * q3 * q2 * q2 * 33
                             + rat_pow(q2, 4) * 8 - d6 * q2 * 54) / (p23 * 729)
               && inv[9] == (a * a * rat_pow(q2, 3) * 36 + a * q3 * q2 * q2 * 51
                             + rat_pow(q2, 4) * 16 - d6 * q2 * 108) / (p23 * 2187)
               && inv[12] == d6 * d6 * rat_pow(Rat(3), 9) / rat_pow(Rat(2), 40)
               && p12 * 3 * (inv[2] * 2 - inv[3]) / 5 == q2 * q2;
        if (!ok) return "closed form mismatch at trial " + std::to_string(t);
    }
    return {};
}

Result criterion_regression_curve(const Context&) {
    TernaryForm F = regression_quartic();
    ReductionReport r13 = classify(F, 13);
    if (r13.d27 != Rat(-4826809)) return "discriminant is not -13^6";
    for (std::size_t i = 0; i < DO_COUNT; ++i) {
        Rat want(i == 12 ? 6 : 0);
        if (r13.do_valuations[i].inf || r13.do_valuations[i].v != want)
            return "13-adic valuation pattern breaks at slot " +
                   std::string(DixmierOhnoVector::names()[i]);
    }
    long iota_want[6] = {1, 2, 2, 3, 3, 3};
    for (std::size_t i = 0; i < 6; ++i)
        if (r13.iota_valuations[i].inf || r13.iota_valuations[i].v != iota_want[i])
            return "iota valuation pattern breaks at slot " + std::to_string(i);
    if (!(r13.v_do_d27 == ValOrInf::of(Rat(2, 9))))
        return "normalized discriminant valuation is not 6/27";
    WeightedRatPoint iota_pt;
    for (std::size_t i = 0; i < IOTA_COUNT; ++i) {
        iota_pt.x.push_back(r13.iota[i]);
        iota_pt.w.push_back(IotaVector::weights()[i]);
    }
    ValOrInf vz = normalized_valuation(iota_pt, rat_pow(r13.invariants[0], 5) * r13.d27,
                                       42, 13);
    if (!(vz == ValOrInf::of(Rat(0))))
        return "normalized valuation of I3^5 D27 against iota is not 0";
    if (r13.type != ReductionType::GoodHyperelliptic) return "type at 13 is wrong";
    if (classify(F, 11).type != ReductionType::GoodQuartic) return "type at 11 is wrong";
    if (classify(F, 101).type != ReductionType::GoodQuartic) return "type at 101 is wrong";
    return {};
}

Result criterion_x12(const Context& ctx) {
    std::ifstream in(ctx.data + "/fixtures/x12.json");
    if (!in) return "fixture file data/fixtures/x12.json is missing";
    Json fix = Json::parse(in, nullptr, false);
    if (fix.is_discarded()) return "fixture file is not valid JSON";
    if (!fix.contains("curve") || fix["curve"].is_null())
        return "fixture curve unavailable: the source never published the "
               "equation, so the expected valuations (0,0,0,1,0,0,2,0,1,0,0,0,9) "
               "and type Bad at 11 stay unverified";
    std::vector<Rat> slots;
    for (const auto& c : fix["curve"]) slots.push_back(rat_from_json(c));
    TernaryForm F = quartic_from_coefficients(slots);
    ReductionReport rep = classify(F, 11);
    std::vector<long> want = fix["expected_do_valuations"].get<std::vector<long>>();
    for (std::size_t i = 0; i < DO_COUNT; ++i)
        if (rep.do_valuations[i].inf || rep.do_valuations[i].v != Rat(want[i]))
            return "11-adic valuation pattern breaks at slot " +
                   std::string(DixmierOhnoVector::names()[i]);
    if (to_string(rep.type) != fix["expected_type"].get<std::string>())
        return "type at 11 is not " + fix["expected_type"].get<std::string>();
    return {};
}

Result criterion_kollar(const Context&) {
    TernaryForm F = kollar_form();
    if (classify(F, 11).type != ReductionType::GoodHyperelliptic)
        return "type at 11 is wrong";
    auto model = detect_toggle(F, 11);
    if (!model) return "no toggle model detected";
    if (!(model->Q == q0_conic()) || model->s != 4 || !(model->G == q("x^4 + z^4")))
        return "detected model is not (Q0, 4, x1^4 + x3^4)";
    SpecialFiber fib = good_toggle_check(*model);
    if (!fib.distinct_roots) return "distinct-roots flag is false";
    BinaryForm oct(8);
    oct[0] = 1;
    oct[8] = 1;
    if (!(fib.octic == reduce_mod_p(oct, 11))) return "special fiber octic is wrong";
    std::vector<Fp> jred;
    ShiodaVector sh = shioda(oct);
    for (std::size_t i = 0; i < 6; ++i) jred.push_back(reduce_mod_p(sh[i], 11));
    FiberPoint want = weighted_point_from_fp(jred, {2, 3, 4, 5, 6, 7});
    FiberPoint got = special_fiber_shioda(F, 11);
    if (!residues_match_up_to_unit(got, want))
        return "fiber invariants differ from those of y^2 = x^8 + z^8";
    return {};
}

Result criterion_congruences(const Context&) {
    Rng rng(1004);
    for (int t = 0; t < 50; ++t) {
        long s = 1 + t % 3;
        long p = (t / 3) % 2 ? 13 : 11;
        TernaryForm G;
        do {
            G = TernaryForm();
            for (const auto& m : monomials3(4))
                if (rng.integer(0, 2)) G.set(m, Rat(rng.integer(0, p - 1)));
        } while (is_zero(reduce_mod_p(G, static_cast<std::uint64_t>(p))));
        ToggleModel m;
        m.Q = q0_conic();
        m.s = s;
        m.G = G;
        m.p = p;
        m.conic_normalized = true;
        CongruenceReport rep = congruence_suite(m);
        if (!rep.all_ok)
            for (auto& line : rep.lines)
                if (!line.ok)
                    return line.label + " margin " +
                           (line.lhs.inf ? std::string("inf") : rat_str(line.lhs.v)) +
                           " below bound " + rat_str(line.bound) + " at trial " +
                           std::to_string(t) + " (s=" + std::to_string(s) +
                           ", p=" + std::to_string(p) + ")";
    }
    return {};
}

Result criterion_b8_h(const Context&) {
    Rng rng(1005);
    for (int t = 0; t < 50; ++t) {
        TernaryForm F = random_quartic(rng, -5, 5);
        LinearMap2 T = random_sl2(rng);
        if (!(b8(act(F, h_embed(T).transpose())) == act(b8(F), T.transpose())))
            return "equivariance fails at trial " + std::to_string(t);
    }
    for (int t = 0; t < 50; ++t)
        if (!b8(q0_conic() * random_conic(rng, -9, 9)).zero())
            return "kernel identity fails at trial " + std::to_string(t);
    for (int t = 0; t < 50; ++t) {
        LinearMap2 T = random_sl2(rng);
        if (!(act(q0_conic(), h_embed(T).transpose()) == q0_conic()))
            return "stabilization fails at trial " + std::to_string(t);
    }
    return {};
}

Result criterion_nullcone(const Context&) {
    Rng rng(1006);
    int made = 0;
    while (made < 20) {
        TernaryForm F;
        for (const auto& m : monomials3(4))
            if (m[0] + m[1] >= 3) F.set(m, rng.rat(-9, 9));
        if (F.zero()) continue;
        ++made;
        DixmierOhnoVector inv = dixmier_ohno(F);
        for (std::size_t i = 0; i < DO_COUNT; ++i)
            if (inv[i] != 0)
                return std::string(DixmierOhnoVector::names()[i]) +
                       " does not vanish on a triple-point quartic";
    }
    return {};
}

Result criterion_hsop(const Context&) {
    auto labels = [](long p) {
        std::vector<std::string> out;
        for (auto& e : hsop_catalog(p).entries) out.push_back(e.label);
        return out;
    };
    std::vector<std::string> generic = {"I3", "I6", "I9", "I12", "I15", "I18", "I27"};
    std::vector<std::string> special = {"I3", "I6", "I9-J9", "I12", "I15", "I18", "I27"};
    std::vector<std::string> five = {"I3", "I6", "(J9+3*I9)/5", "I12", "J15^(5)",
                                     "I18", "I27"};
    if (labels(11) != generic || hsop_catalog(11).p != 0)
        return "catalog at 11 is not the generic list";
    for (long p : {7L, 19L, 47L, 277L, 523L})
        if (labels(p) != special || hsop_catalog(p).p != p)
            return "catalog at " + std::to_string(p) + " is wrong";
    if (labels(5) != five || hsop_catalog(5).p != 5) return "catalog at 5 is wrong";
    for (long p : {2L, 3L}) {
        try {
            hsop_catalog(p);
            return "catalog at " + std::to_string(p) + " was not rejected";
        } catch (const UnsupportedPrime&) {
        }
    }
    return {};
}

Result criterion_valuations(const Context&) {
    TernaryForm F = regression_quartic();
    DixmierOhnoVector inv = dixmier_ohno(F);
    IotaVector io = iota_invariants(inv);
    WeightedRatPoint dos, ios;
    for (std::size_t i = 0; i < DO_COUNT; ++i) {
        dos.x.push_back(inv[i]);
        dos.w.push_back(DixmierOhnoVector::weights()[i]);
    }
    for (std::size_t i = 0; i < IOTA_COUNT; ++i) {
        ios.x.push_back(io[i]);
        ios.w.push_back(IotaVector::weights()[i]);
    }
    if (!(normalized_valuation(dos, quartic_discriminant(inv), 27, 13)
          == ValOrInf::of(Rat(2, 9))))
        return "discriminant computation 6/27 fails";
    if (!(normalized_valuation(ios, io[6], 42, 13) == ValOrInf::of(Rat(0))))
        return "iota computation 6/42 - 1/7 = 0 fails";

    Rng rng(1007);
    const auto& w = DixmierOhnoVector::weights();
    for (int t = 0; t < 100; ++t) {
        long p = t % 2 ? 11 : 13;
        WeightedRatPoint pt;
        for (std::size_t i = 0; i < DO_COUNT; ++i) {
            pt.x.push_back(rng.integer(0, 4) == 0 ? Rat(0) : rng.rat(-500, 500, 60));
            pt.w.push_back(w[i]);
        }
        Rat y = rng.nonzero_rat(-500, 500, 60);
        Rat lam = rng.nonzero_rat(-60, 60, 13);
        WeightedRatPoint sc;
        sc.w = pt.w;
        for (std::size_t i = 0; i < DO_COUNT; ++i)
            sc.x.push_back(pt.x[i] * rat_pow(lam, w[i]));
        if (!(normalized_valuation(sc, y * rat_pow(lam, 27), 27, p)
              == normalized_valuation(pt, y, 27, p)))
            return "rescaling invariance fails at trial " + std::to_string(t);
    }
    return {};
}

Result criterion_picard_classifier(const Context&) {
    PicardReport good = picard_classify(Rat(0), Rat(0), Rat(1), 11);
    if (good.type != ReductionType::GoodQuartic) return "(0,0,1) is not good at 11";
    PicardReport bad = picard_classify(Rat(11), Rat(0), Rat(1331), 11);
    if (bad.type != ReductionType::Bad) return "(11,0,11^3) is not bad at 11";
    if (bad.stable_exponent != Rat(7, 36) || !bad.extension_required)
        return "(11,0,11^3) stable exponent is not 7/36";

    Rng rng(1008);
    const long ps[5] = {5, 7, 11, 13, 17};
    int tried = 0;
    while (tried < 1000) {
        long p = ps[rng.integer(0, 4)];
        Rat a = rng.rat(-9, 9) * rat_pow(Rat(p), rng.integer(0, 2));
        Rat b = rng.rat(-9, 9) * rat_pow(Rat(p), rng.integer(0, 2));
        Rat c = rng.rat(-9, 9) * rat_pow(Rat(p), rng.integer(0, 2));
        PicardReport rep;
        try {
            rep = picard_classify(a, b, c, p);
        } catch (const SingularCurve&) {
            continue;
        }
        ++tried;
        if (!rep.corollary_good.has_value())
            return "corollary flag missing at p = " + std::to_string(p);
        if (*rep.corollary_good != (rep.type == ReductionType::GoodQuartic))
            return "corollary disagrees at trial " + std::to_string(tried);
    }
    tried = 0;
    while (tried < 100) {
        Rat a = rng.rat(-9, 9) * rat_pow(Rat(11), rng.integer(0, 2));
        Rat b = rng.rat(-9, 9) * rat_pow(Rat(11), rng.integer(0, 2));
        Rat c = rng.rat(-9, 9) * rat_pow(Rat(11), rng.integer(0, 2));
        PicardReport rep;
        try {
            rep = picard_classify(a, b, c, 11);
        } catch (const SingularCurve&) {
            continue;
        }
        ++tried;
        DixmierOhnoVector inv = dixmier_ohno(picard_form(a, b, c));
        if (good_quartic_test(inv, 11) != (rep.type == ReductionType::GoodQuartic))
            return "full test disagrees at trial " + std::to_string(tried);
    }
    return {};
}

// stdout of a command, or nullopt on nonzero exit
std::optional<std::string> run_capture(const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return std::nullopt;
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    return pclose(pipe) == 0 ? std::optional<std::string>(out) : std::nullopt;
}

Result criterion_determinism(const Context& ctx) {
    if (ctx.cli.empty()) return "no --cli path given";
    std::ifstream golden_in(ctx.data + "/golden/corpus.out.ndjson",
                            std::ios::binary);
    if (!golden_in) return "golden file data/golden/corpus.out.ndjson is missing";
    std::stringstream golden;
    golden << golden_in.rdbuf();

    std::string base = "\"" + ctx.cli + "\" batch \"" + ctx.data
                     + "/corpus.ndjson\" --certificate --hsop";
    for (const std::string threads : {"1", "4", "1", "4"}) {
        auto out = run_capture(base + " --threads " + threads);
        if (!out) return "batch run failed with --threads " + threads;
        if (*out != golden.str())
            return "output differs from the golden corpus with --threads " + threads;
    }
    return {};
}

struct Criterion {
    const char* name;
    Result (*run)(const Context&);
};

const Criterion table[13] = {
    {"conic-square closed form", criterion_conic_square},
    {"rho anchors and equivariance", criterion_rho},
    {"quartic-from-binary closed forms", criterion_picard_forms},
    {"regression curve with discriminant -13^6", criterion_regression_curve},
    {"archived regression fixture", criterion_x12},
    {"conic-square perturbation model", criterion_kollar},
    {"reduction congruence margins", criterion_congruences},
    {"b8 and h embedding identities", criterion_b8_h},
    {"nullcone vanishing", criterion_nullcone},
    {"parameter catalogs", criterion_hsop},
    {"valuation algebra", criterion_valuations},
    {"quartic-from-binary classifier", criterion_picard_classifier},
    {"batch byte determinism", criterion_determinism},
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance N [--cli PATH] [--data PATH]\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    if (n < 1 || n > 13) {
        std::cerr << "criterion number out of range\n";
        return 2;
    }
    Context ctx;
    for (int i = 2; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") ctx.cli = argv[i + 1];
        else if (flag == "--data") ctx.data = argv[i + 1];
    }
    Result r;
    try {
        r = table[n - 1].run(ctx);
    } catch (const std::exception& e) {
        r = std::string("unexpected exception: ") + e.what();
    }
    if (r.empty()) {
        std::cout << "[PASS] criterion " << n << ": " << table[n - 1].name << "\n";
        return 0;
    }
    std::cout << "[FAIL] criterion " << n << ": " << table[n - 1].name << " — " << r
              << "\n";
    return 1;
}
