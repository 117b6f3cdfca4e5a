#include "quartic/dixmier_ohno.hpp"

#include "quartic/conic.hpp"
#include "quartic/resultant.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace quartic {

namespace {

using Mat3 = std::array<std::array<Rat, 3>, 3>;

Rat det3(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
         - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
         + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

Mat3 adj3(const Mat3& A) {
    auto minor = [&](int i, int j) -> Rat {
        int r0 = i == 0 ? 1 : 0, r1 = i == 2 ? 1 : 2;
        int c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
        return A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0];
    };
    Mat3 R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            R[i][j] = ((i + j) % 2 ? Rat(-minor(j, i)) : minor(j, i));
    return R;
}

Rat dot9(const Mat3& A, const Mat3& B) {
    Rat s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += A[i][j] * B[i][j];
    return s;
}

Rat j11(const TernaryForm& cov, const TernaryForm& con) {
    return dot9(conic_gram(cov), conic_gram(con));
}
Rat j22(const TernaryForm& cov, const TernaryForm& con) {
    return dot9(adj3(conic_gram(cov)), adj3(conic_gram(con)));
}
Rat j30(const TernaryForm& cov) { return det3(conic_gram(cov)); }
Rat j03(const TernaryForm& con) { return det3(conic_gram(con)); }

TernaryForm hessian(const TernaryForm& f) {
    TernaryForm H[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) H[i][j] = H[j][i] = f.diff(i).diff(j);
    return H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1])
         - H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0])
         + H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
}

// F(d/dx) applied to G; the first argument acts as a differential operator.
TernaryForm diffop(const TernaryForm& F, const TernaryForm& G) {
    TernaryForm out;
    for (auto& [m, v] : F.terms()) {
        TernaryForm g = G;
        for (int i = 0; i < 3; ++i)
            if (m[i]) g = g.diff(i, m[i]);
        if (!is_zero(g)) out = out + g * v;
    }
    return out;
}

Rat scalar_part(const TernaryForm& p) {
    for (auto& [m, v] : p.terms())
        if (mono_deg(m) != 0) throw std::logic_error("scalar_part: positive degree");
    return p.coeff({0, 0, 0});
}

// Binary slices: binary forms in the line parameters (s, t) whose
// coefficients are forms in the dual coordinates u.
using Slice = BinaryFormT<TernaryForm>;

// Restriction of f to u . x = 0 via x1 = -u3 t, x2 = u3 s, x3 = u1 t - u2 s,
// then the binary covariants S = (g,g)_4 and T = ((g,g)_2, g)_4. Both are
// divisible by the stated powers of u3; the quotients are the contravariants
// sigma (class 4) and psi (class 6).
std::pair<TernaryForm, TernaryForm> sigma_psi(const TernaryForm& f) {
    auto u = [](int i) {
        Mono3 m{0, 0, 0};
        m[i] = 1;
        return TernaryForm::monomial(m, Rat(1));
    };
    std::array<Slice, 3> img;
    img[0] = Slice(1);
    img[0][1] = -u(2);
    img[1] = Slice(1);
    img[1][0] = u(2);
    img[2] = Slice(1);
    img[2][0] = -u(1);
    img[2][1] = u(0);
    Slice g(4);
    for (auto& [m, c] : f.terms()) {
        Slice t(0);
        t[0] = TernaryForm::monomial({0, 0, 0}, c);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < m[i]; ++k) t = t * img[i];
        g = g + t;
    }
    Slice S = transvectant(g, g, 4);
    Slice H2 = transvectant(g, g, 2);
    Slice T = transvectant(H2, g, 4);
    return {S[0].divexact_var_power(2, 4), T[0].divexact_var_power(2, 6)};
}

// det of the 6x6 matrix of fourth partials indexed by degree-2 monomials.
Rat catalecticant6(const TernaryForm& f) {
    auto mons = monomials3(2);
    std::vector<std::vector<Rat>> M(6, std::vector<Rat>(6));
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
            TernaryForm g = f;
            for (int i = 0; i < 3; ++i) {
                int k = mons[r][i] + mons[c][i];
                if (k) g = g.diff(i, k);
            }
            M[r][c] = scalar_part(g);
        }
    return det_rational(M);
}

const std::array<Rat, DO_COUNT>& slot_divisors() {
    static const std::array<Rat, DO_COUNT> d = {
        rat_pow(2, 4) * rat_pow(3, 2),    // I3
        rat_pow(2, 18) * rat_pow(3, 6),   // I6
        rat_pow(2, 12) * rat_pow(3, 7),   // I9
        rat_pow(2, 15) * rat_pow(3, 8),   // J9
        rat_pow(2, 15) * rat_pow(3, 9),   // I12
        rat_pow(2, 20) * rat_pow(3, 10),  // J12
        rat_pow(2, 21) * rat_pow(3, 12),  // I15
        rat_pow(2, 30) * rat_pow(3, 15),  // J15
        rat_pow(2, 24) * rat_pow(3, 14),  // I18
        rat_pow(2, 30) * rat_pow(3, 16),  // J18
        rat_pow(2, 39) * rat_pow(3, 18),  // I21
        rat_pow(2, 40) * rat_pow(3, 18),  // J21
        -rat_pow(2, 54),                  // I27 (from the cubic resultant)
    };
    return d;
}

} // namespace

const std::array<const char*, DO_COUNT>& DixmierOhnoVector::names() {
    static const std::array<const char*, DO_COUNT> n = {
        "I3", "I6", "I9", "J9", "I12", "J12", "I15",
        "J15", "I18", "J18", "I21", "J21", "I27"};
    return n;
}

const std::array<int, DO_COUNT>& DixmierOhnoVector::weights() {
    static const std::array<int, DO_COUNT> w = {3,  6,  9,  9,  12, 12, 15,
                                                15, 18, 18, 21, 21, 27};
    return w;
}

DixmierOhnoVector dixmier_ohno(const TernaryForm& F) {
    if (is_zero(F) || !F.homogeneous(4))
        throw std::domain_error("dixmier_ohno: form must be homogeneous of degree 4");

    // Clear denominators; slot d of the result rescales by L^-d.
    Int L(1);
    for (auto& [m, c] : F.terms())
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), denominator(c).get_mpz_t());
    TernaryForm f = F * Rat(L);

    TernaryForm He = hessian(f);
    auto [Sig, Psi] = sigma_psi(f);
    TernaryForm Rho = diffop(f, Psi);
    TernaryForm Tau = diffop(Rho, f);
    TernaryForm Xi = diffop(Sig, He);
    TernaryForm Eta = diffop(Xi, Sig);
    TernaryForm Nu = diffop(Eta, diffop(Rho, He));

    std::array<Rat, DO_COUNT> raw = {
        scalar_part(diffop(Sig, f)),
        catalecticant6(f),
        j11(Tau, Rho),
        j11(Xi, Rho),
        j03(Rho),
        j11(Tau, Eta),
        j30(Tau),
        j30(Xi),
        j22(Tau, Rho),
        j22(Xi, Rho),
        j03(Eta),
        j11(Nu, Eta),
        macaulay_resultant_cubics(f.diff(0), f.diff(1), f.diff(2)),
    };

    DixmierOhnoVector out;
    auto& div = slot_divisors();
    auto& wts = DixmierOhnoVector::weights();
    for (std::size_t i = 0; i < DO_COUNT; ++i)
        out[i] = raw[i] / div[i] / rat_pow(Rat(L), wts[i]);
    return out;
}

Rat quartic_discriminant(const DixmierOhnoVector& inv) {
    return rat_pow(2, 40) * inv[12];
}

Rat quartic_discriminant(const TernaryForm& F) {
    return quartic_discriminant(dixmier_ohno(F));
}

TernaryForm rho_contravariant(const TernaryForm& F) {
    if (is_zero(F) || !F.homogeneous(4))
        throw std::domain_error("rho_contravariant: form must be homogeneous of degree 4");
    auto [Sig, Psi] = sigma_psi(F);
    (void)Sig;
    return diffop(F, Psi) * Rat(1, 6);
}

const std::array<Rat, DO_COUNT>& conic_square_residues() {
    static const std::array<Rat, DO_COUNT> r = {
        Rat(1),           Rat(1, 180),      Rat(49, 36),   Rat(49, 60),
        Rat(343, 1620),   Rat(49, 36),      Rat(1715, 3888), Rat(343, 3600),
        Rat(2401, 3888),  Rat(2401, 10800), Rat(343, 1620), Rat(2401, 720),
        Rat(0)};
    return r;
}

DixmierOhnoVector conic_square_invariants(const TernaryForm& Q) {
    if (!Q.homogeneous(2))
        throw std::domain_error("conic_square_invariants: form must be homogeneous of degree 2");
    Rat d3 = conic_d3(Q);
    Rat i3 = Rat(5, 36) * d3 * d3;
    DixmierOhnoVector out;
    auto& res = conic_square_residues();
    auto& wts = DixmierOhnoVector::weights();
    for (std::size_t i = 0; i < DO_COUNT; ++i)
        out[i] = res[i] * rat_pow(i3, wts[i] / 3);
    return out;
}

} // namespace quartic
