#include <doctest.h>

#include "quartic/classifier.hpp"
#include "quartic/shioda.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace quartic::testsupport;

namespace {

TernaryForm regression_quartic() {
    // discriminant -13^6; hyperelliptic reduction at 13, good elsewhere
    return q(
        "(y+z)*x^3 - (2*y^2+z*y)*x^2 + (y^3-z*y^2+2*z^2*y-z^3)*x"
        " - 2*z^2*y^2 + 3*z^3*y");
}

TernaryForm kollar_form() {
    return q0_conic() * q0_conic()
         + (q("x^4") + q("z^4")) * rat_pow(Rat(11), 4);
}

TernaryForm picard_form(const Rat& a, const Rat& b, const Rat& c) {
    return q("-y^3*z + x^4") + q("x^2*z^2") * a + q("x*z^3") * b
         + q("z^4") * c;
}

std::vector<Fp> reduce_list(const ShiodaVector& j, long p, std::size_t n) {
    std::vector<Fp> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(reduce_mod_p(j[i], static_cast<std::uint64_t>(p)));
    return out;
}

} // namespace

TEST_CASE("hsop catalogs") {
    HsopCatalog generic = hsop_catalog(11);
    CHECK(generic.p == 0);
    REQUIRE(generic.entries.size() == 7);
    const char* names[7] = {"I3", "I6", "I9", "I12", "I15", "I18", "I27"};
    int weights[7] = {3, 6, 9, 12, 15, 18, 27};
    for (int i = 0; i < 7; ++i) {
        CHECK(generic.entries[i].label == names[i]);
        CHECK(generic.entries[i].weight == weights[i]);
    }

    DixmierOhnoVector inv = dixmier_ohno(regression_quartic());
    CHECK(generic.entries[2].eval(inv) == inv[2]);

    for (long p : {7L, 19L, 47L, 277L, 523L}) {
        HsopCatalog cat = hsop_catalog(p);
        CHECK(cat.p == p);
        CHECK(cat.entries[2].label == "I9-J9");
        CHECK(cat.entries[2].eval(inv) == inv[2] - inv[3]);
        CHECK(cat.entries[2].weight == 9);
    }

    HsopCatalog five = hsop_catalog(5);
    CHECK(five.p == 5);
    CHECK(five.entries[2].label == "(J9+3*I9)/5");
    CHECK(five.entries[2].eval(inv) == (inv[3] + inv[2] * 3) / 5);
    CHECK(five.entries[4].label == "J15^(5)");

    CHECK_THROWS_AS(hsop_catalog(2), UnsupportedPrime);
    CHECK_THROWS_AS(hsop_catalog(3), UnsupportedPrime);
}

TEST_CASE("classification of the regression quartic") {
    TernaryForm F = regression_quartic();

    ReductionReport r13 = classify(F, 13);
    CHECK(r13.type == ReductionType::GoodHyperelliptic);
    CHECK(r13.content_shift == 0);
    CHECK(r13.d27 == Rat(-4826809));
    for (std::size_t i = 0; i < DO_COUNT; ++i) {
        REQUIRE(!r13.do_valuations[i].inf);
        CHECK(r13.do_valuations[i].v == (i == 12 ? 6 : 0));
    }
    long iota_vals[IOTA_COUNT] = {1, 2, 2, 3, 3, 3, 6};
    for (std::size_t i = 0; i < IOTA_COUNT; ++i) {
        REQUIRE(!r13.iota_valuations[i].inf);
        CHECK(r13.iota_valuations[i].v == iota_vals[i]);
    }
    CHECK(r13.v_do_d27 == ValOrInf::of(Rat(2, 9)));
    CHECK(r13.v_do_i3 == ValOrInf::of(Rat(0)));
    CHECK(r13.v_do_i27 == ValOrInf::of(Rat(2, 9)));
    CHECK(r13.v_iota_i42 == ValOrInf::of(Rat(0)));
    CHECK(!r13.good_quartic);
    CHECK(r13.hyperelliptic);
    CHECK(r13.toggle_locus);

    REQUIRE(r13.special_fiber.has_value());
    const FiberPoint& fib = *r13.special_fiber;
    CHECK(fib.lambda == ValOrInf::of(Rat(3, 7)));
    CHECK(!fib.integral);
    CHECK(fib.base == 5);
    for (int i = 0; i < 6; ++i)
        CHECK(fib.ratios[i] == Fp(i == 5 ? 1 : 0, 13));

    // the fiber is the weighted invariant point of y^2 = x^7 z - z^8
    BinaryForm oct(8);
    oct[1] = 1;
    oct[8] = -1;
    FiberPoint want = weighted_point_from_fp(reduce_list(shioda(oct), 13, 6),
                                             {2, 3, 4, 5, 6, 7});
    CHECK(same_projective_point(fib, want));

    ReductionReport r11 = classify(F, 11);
    CHECK(r11.type == ReductionType::GoodQuartic);
    CHECK(r11.good_quartic);
    CHECK(!r11.toggle_locus);
    CHECK(!r11.special_fiber.has_value());

    CHECK(classify(F, 101).type == ReductionType::GoodQuartic);
}

TEST_CASE("classification of the conic-square perturbation") {
    TernaryForm F = kollar_form();
    ReductionReport rep = classify(F, 11);
    CHECK(rep.type == ReductionType::GoodHyperelliptic);
    CHECK(rep.v_do_d27 == ValOrInf::of(Rat(56, 27)));
    CHECK(rep.v_iota_i42 == ValOrInf::of(Rat(0)));
    CHECK(!rep.good_quartic);
    CHECK(rep.hyperelliptic);
    CHECK(rep.toggle_locus);

    REQUIRE(rep.special_fiber.has_value());
    const FiberPoint& fib = *rep.special_fiber;
    CHECK(fib.lambda == ValOrInf::of(Rat(4)));
    CHECK(fib.integral);
    long fib_residues[6] = {2, 0, 8, 0, 1, 0};
    long fib_ratios[6] = {1, 0, 10, 0, 1, 0};
    for (int i = 0; i < 6; ++i) {
        CHECK(fib.residues[i] == Fp(fib_residues[i], 11));
        CHECK(fib.ratios[i] == Fp(fib_ratios[i], 11));
    }
    CHECK(fib.base == 0);

    // fiber equation y^2 = x^8 + z^8, up to the weighted unit action
    BinaryForm oct(8);
    oct[0] = 1;
    oct[8] = 1;
    FiberPoint want = weighted_point_from_fp(reduce_list(shioda(oct), 11, 6),
                                             {2, 3, 4, 5, 6, 7});
    CHECK(residues_match_up_to_unit(fib, want));
    CHECK(same_projective_point(fib, want));

    FiberPoint again = special_fiber_shioda(F, 11);
    CHECK(same_projective_point(fib, again));

    // good toggle implies the hyperelliptic classification
    auto model = detect_toggle(F, 11);
    REQUIRE(model.has_value());
    CHECK(good_toggle_check(*model).distinct_roots);
}

TEST_CASE("content shifts") {
    TernaryForm F = regression_quartic();
    ReductionReport up = classify(F * rat_pow(Rat(11), 2), 11);
    CHECK(up.content_shift == 2);
    CHECK(up.type == ReductionType::GoodQuartic);
    ReductionReport down = classify(F * Rat(1, 11), 11);
    CHECK(down.content_shift == -1);
    CHECK(down.type == ReductionType::GoodQuartic);
    CHECK(up.invariants[0] == down.invariants[0]);
}

TEST_CASE("unsupported primes and singular inputs") {
    TernaryForm F = regression_quartic();
    for (long p : {2L, 3L}) {
        ReductionReport rep = classify(F, p);
        CHECK(rep.type == ReductionType::Unsupported);
        CHECK(rep.unsupported_reason == "no_hsop_catalog");
    }

    TernaryForm klein = q("x^3*y + y^3*z + z^3*x");
    ReductionReport k7 = classify(klein, 7);
    CHECK(k7.type == ReductionType::Unsupported);
    CHECK(k7.unsupported_reason == "hyperelliptic_branch_unavailable");
    CHECK(classify(klein, 11).type == ReductionType::GoodQuartic);

    CHECK_THROWS_AS(classify(q("x^4"), 11), SingularCurve);
    CHECK_THROWS_AS(classify(q0_conic() * q0_conic(), 11), SingularCurve);
    CHECK_THROWS_AS(classify(F, 6), std::domain_error);
    CHECK_THROWS_AS(classify(q("x^2 + y*z"), 11), std::domain_error);
    CHECK_THROWS_AS(special_fiber_shioda(F, 11), std::domain_error);
}

TEST_CASE("component tests on the regression quartic") {
    DixmierOhnoVector inv = dixmier_ohno(regression_quartic());
    IotaVector io = iota_invariants(inv);
    CHECK(good_quartic_test(inv, 11));
    CHECK(!good_quartic_test(inv, 13));
    CHECK(toggle_locus_test(inv, 13));
    CHECK(!toggle_locus_test(inv, 11));
    CHECK(hyperelliptic_test(inv, io, 13));
    CHECK(!hyperelliptic_test(inv, io, 11));
    CHECK_THROWS_AS(toggle_locus_test(inv, 5), UnsupportedPrime);
    CHECK_THROWS_AS(hyperelliptic_test(inv, io, 7), UnsupportedPrime);

    DixmierOhnoVector kinv = dixmier_ohno(kollar_form());
    IotaVector kio = iota_invariants(kinv);
    CHECK(!good_quartic_test(kinv, 11));
    CHECK(toggle_locus_test(kinv, 11));
    CHECK(hyperelliptic_test(kinv, kio, 11));
}

TEST_CASE("picard family criterion") {
    PicardReport good = picard_classify(Rat(0), Rat(0), Rat(1), 11);
    CHECK(good.type == ReductionType::GoodQuartic);
    CHECK(good.q2 == 12);
    CHECK(good.q3 == 0);
    CHECK(good.d6 == 256);
    CHECK(good.stable_exponent == 0);
    CHECK(!good.extension_required);
    REQUIRE(good.corollary_good.has_value());
    CHECK(*good.corollary_good);

    PicardReport bad = picard_classify(Rat(11), Rat(0), Rat(1331), 11);
    CHECK(bad.type == ReductionType::Bad);
    CHECK(bad.stable_exponent == Rat(7, 36));
    CHECK(bad.extension_required);
    REQUIRE(bad.corollary_good.has_value());
    CHECK(!*bad.corollary_good);

    PicardReport p3 = picard_classify(Rat(1), Rat(0), Rat(1), 3);
    CHECK(p3.q2 == 13);
    CHECK(p3.q3 == 70);
    CHECK(p3.d6 == 144);
    CHECK(!p3.corollary_good.has_value());

    CHECK_THROWS_AS(picard_classify(Rat(1), Rat(0), Rat(0), 11), SingularCurve);
    CHECK_THROWS_AS(picard_classify(Rat(1), Rat(1), Rat(1), 2), UnsupportedPrime);
    CHECK_THROWS_AS(picard_classify(Rat(1), Rat(1), Rat(1), 9), std::domain_error);
}

TEST_CASE("picard criterion matches the corollary and the full test") {
    Rng rng(801);
    int tried = 0;
    while (tried < 12) {
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
        REQUIRE(rep.corollary_good.has_value());
        CHECK(*rep.corollary_good == (rep.type == ReductionType::GoodQuartic));
        DixmierOhnoVector inv = dixmier_ohno(picard_form(a, b, c));
        CHECK(good_quartic_test(inv, 11) == (rep.type == ReductionType::GoodQuartic));
    }
}
