#include <doctest.h>

#include "quartic/conic.hpp"
#include "quartic/fp.hpp"
#include "test_support.hpp"

using namespace quartic;
using namespace quartic::testsupport;

TEST_CASE("conic bookkeeping") {
    TernaryForm Q0 = q("y^2 - 4*x*z");
    auto co = conic_coeffs(Q0);  // x1^2, x2^2, x3^2, x1x2, x1x3, x2x3
    CHECK(co[1] == 1);
    CHECK(co[4] == -4);
    CHECK(conic_d3(Q0) == -16);

    Rng rng(301);
    for (int t = 0; t < 10; ++t) {
        TernaryForm Q = random_conic(rng, -6, 6, 3);
        auto G = conic_gram(Q);
        Rat det = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1])
                - G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0])
                + G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
        CHECK(conic_d3(Q) == det * 4);
        CHECK(G[0][1] == G[1][0]);
        // the quadratic form of the matrix is Q itself
        std::array<Rat, 3> v{rng.rat(-5, 5), rng.rat(-5, 5), rng.rat(-5, 5)};
        Rat qf(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) qf += G[i][j] * v[i] * v[j];
        CHECK(qf == Q.evaluate(v));
    }
}

TEST_CASE("square roots of conic squares over F_p") {
    Rng rng(302);
    const std::uint64_t p = 11;
    int found = 0;
    for (int t = 0; t < 25; ++t) {
        TernaryForm Q = random_conic(rng, -10, 10);
        auto Qbar = reduce_mod_p(Q, p);
        if (Qbar.zero()) continue;
        auto F = Qbar * Qbar;
        auto sq = conic_square_root(F);
        REQUIRE(sq.has_value());
        auto [root, scale] = *sq;
        CHECK((root * root).scaled(scale) == F);
        CHECK(root.leading_coeff() == Fp(1, p));
        ++found;
    }
    CHECK(found >= 20);

    // degenerate squares are still squares
    auto x2 = reduce_mod_p(q("x^2"), p);
    auto sq = conic_square_root(x2 * x2);
    REQUIRE(sq.has_value());
    CHECK(sq->first == x2);

    // a smooth quartic is not a conic square
    auto klein = reduce_mod_p(q("x^3*y + y^3*z + z^3*x"), p);
    CHECK(!conic_square_root(klein).has_value());
    // nor is conic * different conic
    auto other = reduce_mod_p(q("(y^2 - 4*x*z)*(x^2 + y^2 + z^2)"), p);
    CHECK(!conic_square_root(other).has_value());
}

TEST_CASE("exact division of ternary forms over F_p") {
    Rng rng(303);
    const std::uint64_t p = 13;
    for (int t = 0; t < 15; ++t) {
        auto A = reduce_mod_p(random_conic(rng, -12, 12), p);
        auto B = reduce_mod_p(random_conic(rng, -12, 12), p);
        if (A.zero() || B.zero()) continue;
        auto quot = divide_exact(A * B, A);
        REQUIRE(quot.has_value());
        CHECK(*quot == B);
    }
    auto Q0 = reduce_mod_p(q("y^2 - 4*x*z"), p);
    auto F = reduce_mod_p(q("x^4 + y^4 + z^4"), p);
    CHECK(!divide_exact(F, Q0).has_value());
}
