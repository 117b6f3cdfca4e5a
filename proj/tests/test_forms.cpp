#include <doctest.h>

#include "test_support.hpp"

using namespace quartic;
using namespace quartic::testsupport;

TEST_CASE("monomials3 lists the documented slot order") {
    auto order = monomials3(4);
    REQUIRE(order.size() == 15);
    CHECK(order.front() == Mono3{4, 0, 0});
    CHECK(order[1] == Mono3{3, 1, 0});
    CHECK(order[2] == Mono3{3, 0, 1});
    CHECK(order[3] == Mono3{2, 2, 0});
    CHECK(order[10] == Mono3{0, 4, 0});
    CHECK(order.back() == Mono3{0, 0, 4});
    for (auto& m : order) CHECK(mono_deg(m) == 4);
}

TEST_CASE("ternary arithmetic and derivatives") {
    TernaryForm f = q("x^2*y - 3*z^3 + y*z^2/2");
    CHECK(f.coeff({2, 1, 0}) == 1);
    CHECK(f.coeff({0, 0, 3}) == -3);
    CHECK(f.coeff({0, 1, 2}) == Rat(1, 2));
    CHECK(f.degree() == 3);
    CHECK(!f.homogeneous(2));
    CHECK(f.homogeneous(3));

    TernaryForm fx = f.diff(0);
    CHECK(fx == q("2*x*y"));
    CHECK(f.diff(2, 2) == q("-18*z + y"));

    std::array<Rat, 3> at{Rat(1), Rat(2), Rat(-1)};
    CHECK(f.evaluate(at) == Rat(2) + Rat(3) + Rat(1));  // 2 + 3 + 1

    CHECK((f - f).zero());
    CHECK(f * Rat(2) == f + f);
    CHECK(q("x*y*z").divexact_var_power(1, 1) == q("x*z"));
    CHECK_THROWS_AS(q("x*y").divexact_var_power(2, 1), std::domain_error);
}

TEST_CASE("linear substitution composes contravariantly") {
    Rng rng(101);
    for (int t = 0; t < 10; ++t) {
        TernaryForm F = random_quartic(rng, -4, 4);
        LinearMap3 S = random_gl3(rng), T = random_gl3(rng);
        CHECK(act(act(F, S), T) == act(F, S * T));
    }
    CHECK(act(q("x"), LinearMap3::scalar(Rat(2))) == q("2*x"));
}

TEST_CASE("LinearMap3 inverse and transpose") {
    Rng rng(102);
    for (int t = 0; t < 10; ++t) {
        LinearMap3 T = random_gl3(rng);
        CHECK(T * T.inverse() == LinearMap3::identity());
        CHECK(T.transpose().det() == T.det());
    }
    CHECK_THROWS_AS(LinearMap3::scalar(Rat(0)).inverse(), std::domain_error);
}

TEST_CASE("sl3 generator has determinant one") {
    Rng rng(103);
    for (int t = 0; t < 20; ++t) CHECK(random_sl3(rng).det() == 1);
    for (int t = 0; t < 20; ++t) {
        LinearMap2 T = random_sl2(rng);
        CHECK(T.det() == 1);
    }
}

TEST_CASE("binary form calculus") {
    // x^4 - z^4 as a dense vector, slot i holding x^(4-i) z^i.
    BinaryForm f(4, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)});
    CHECK(f.diff_x() == BinaryForm(3, {Rat(4), Rat(0), Rat(0), Rat(0)}));
    CHECK(f.diff_z() == BinaryForm(3, {Rat(0), Rat(0), Rat(0), Rat(-4)}));
    BinaryForm g = f * f;
    CHECK(g.degree() == 8);
    CHECK(g[0] == 1);
    CHECK(g[4] == -2);
    CHECK(g[8] == 1);
}

TEST_CASE("transvectant anchors") {
    BinaryForm x2(2, {Rat(1), Rat(0), Rat(0)});
    BinaryForm z2(2, {Rat(0), Rat(0), Rat(1)});
    // ((2-2)!(2-2)!/(2!2!)) * f_xx g_zz = (1/4) * 2 * 2 = 1
    BinaryForm t = transvectant(x2, z2, 2);
    REQUIRE(t.degree() == 0);
    CHECK(t[0] == 1);

    Rng rng(104);
    for (int k = 1; k <= 7; k += 2) {
        BinaryForm f = random_octic(rng);
        CHECK(transvectant(f, f, k).zero());  // odd levels kill (f,f)
    }
    BinaryForm f = random_octic(rng), g = random_octic(rng);
    CHECK(transvectant(f, g, 0) == f * g);
}

TEST_CASE("transvectants are joint SL2 invariants") {
    Rng rng(105);
    for (int t = 0; t < 5; ++t) {
        BinaryForm f = random_octic(rng), g = random_octic(rng);
        LinearMap2 T = random_sl2(rng);
        for (int k = 2; k <= 8; k += 2)
            CHECK(transvectant(act(f, T), act(g, T), k) ==
                  act(transvectant(f, g, k), T));
    }
}
