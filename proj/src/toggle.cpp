#include "quartic/toggle.hpp"

#include "quartic/dixmier_ohno.hpp"
#include "quartic/hsop.hpp"
#include "quartic/iota.hpp"
#include "quartic/shioda.hpp"

#include <stdexcept>

namespace quartic {

const TernaryForm& q0_conic() {
    static const TernaryForm Q0 = [] {
        TernaryForm q;
        q.set({0, 2, 0}, Rat(1));
        q.set({1, 0, 1}, Rat(-4));
        return q;
    }();
    return Q0;
}

LinearMap3 h_embed(const LinearMap2& T) {
    const Rat &a = T.a[0][0], &b = T.a[0][1], &c = T.a[1][0], &d = T.a[1][1];
    LinearMap3 H;
    H.a[0][0] = a * a;
    H.a[0][1] = a * b * 2;
    H.a[0][2] = b * b;
    H.a[1][0] = a * c;
    H.a[1][1] = a * d + b * c;
    H.a[1][2] = b * d;
    H.a[2][0] = c * c;
    H.a[2][1] = c * d * 2;
    H.a[2][2] = d * d;
    return H;
}

std::optional<ToggleModel> detect_toggle(const TernaryForm& F, long p) {
    if (p < 3) throw UnsupportedPrime("detect_toggle: odd prime required");
    if (is_zero(F) || !F.homogeneous(4))
        throw std::domain_error("detect_toggle: homogeneous quartic expected");
    bool primitive = false;
    for (auto& [m, c] : F.terms()) {
        long v = val_p_int(c, p);
        if (v < 0) throw std::domain_error("detect_toggle: form is not p-integral");
        if (v == 0) primitive = true;
    }
    if (!primitive) throw std::domain_error("detect_toggle: form is not p-primitive");

    auto pp = static_cast<std::uint64_t>(p);
    auto Fbar = reduce_mod_p(F, pp);
    auto sq = conic_square_root(Fbar);
    if (!sq) return std::nullopt;
    auto [qbar, cbar] = *sq;
    if (is_zero(conic_d3(qbar))) return std::nullopt;

    Rat d27 = quartic_discriminant(F);
    if (d27 == 0) return std::nullopt;
    long peel_bound = 4 * val_p_int(d27, p);

    ToggleModel model;
    model.p = p;

    // Move the conic onto x2^2 - 4 x1 x3 when a monomial substitution does
    // it: the support must be one square slot plus the complementary
    // rectangle slot.
    auto co = conic_coeffs(qbar);
    int k = -1;
    bool clean = true;
    for (int i = 0; i < 3; ++i)
        if (!is_zero(co[i])) k = (k == -1 ? i : (clean = false, k));
    int rect = k >= 0 ? 5 - k : -1;
    if (clean && k >= 0 && !is_zero(co[rect])) {
        for (int i = 3; i < 6; ++i)
            if (i != rect && !is_zero(co[i])) clean = false;
    } else {
        clean = false;
    }

    TernaryForm Q, Fprime;
    if (clean) {
        int vi = k == 0 ? 1 : 0;
        int vj = k == 2 ? 1 : 2;
        Fp lambda = co[k].inv();
        Fp di = -(co[k] * 4) / co[rect];
        LinearMap3 T;
        for (int r = 0; r < 3; ++r)
            for (int c2 = 0; c2 < 3; ++c2) T.a[r][c2] = 0;
        T.a[k][1] = 1;
        T.a[vi][0] = Rat(static_cast<long>(di.v));
        T.a[vj][2] = 1;
        Fp mufp = lambda * lambda / cbar;
        model.T = T;
        model.mu = Rat(static_cast<long>(mufp.v));
        model.conic_normalized = true;
        Q = q0_conic();
        Fprime = act(F, T) * model.mu;
    } else {
        model.mu = Rat(static_cast<long>(cbar.inv().v));
        model.conic_normalized = false;
        Q = lift_mod_p(qbar);
        Fprime = F * model.mu;
    }

    auto qn = reduce_mod_p(Q, pp);
    Fp inv2 = Fp(2, pp).inv();
    Rat pr(p);
    while (true) {
        TernaryForm E = Fprime - Q * Q;
        if (is_zero(E)) return std::nullopt;  // exact square, no primitive G
        long r = 0;
        bool first = true;
        for (auto& [m, c] : E.terms()) {
            long v = val_p_int(c, p);
            if (first || v < r) r = v;
            first = false;
        }
        if (r > peel_bound)
            throw std::logic_error("detect_toggle: peel exceeded the discriminant bound");
        TernaryForm G = E * rat_pow(pr, -r);
        auto Gbar = reduce_mod_p(G, pp);
        auto quot = divide_exact(Gbar, qn);
        if (!quot) {
            model.Q = Q;
            model.s = r;
            model.G = G;
            return model;
        }
        Q = Q + lift_mod_p(quot->scaled(inv2)) * rat_pow(pr, r);
    }
}

SpecialFiber good_toggle_check(const ToggleModel& m) {
    if (!m.conic_normalized)
        throw std::domain_error("good_toggle_check: conic is not in normalized position");
    auto pp = static_cast<std::uint64_t>(m.p);
    SpecialFiber fib;
    fib.octic = b8(reduce_mod_p(m.G, pp));
    Rat d14 = binary_octic_discriminant(lift_mod_p(fib.octic));
    fib.distinct_roots = !is_zero(reduce_mod_p(d14, pp));
    return fib;
}

CongruenceReport congruence_suite(const ToggleModel& m) {
    if (is_zero(m.G) || is_zero(reduce_mod_p(m.G, static_cast<std::uint64_t>(m.p))))
        throw std::domain_error("congruence_suite: G must be primitive at p");
    CongruenceReport rep;
    rep.p = m.p;
    rep.s = m.s;
    Rat pr(m.p);
    TernaryForm Fm = q0_conic() * q0_conic() + m.G * rat_pow(pr, m.s);
    IotaVector io = iota_invariants(dixmier_ohno(Fm));
    BinaryForm f = b8(m.G);
    ShiodaVector sh = shioda(f);
    Rat d14 = binary_octic_discriminant(f);

    auto push = [&](const std::string& label, const Rat& diff, long bound) {
        CongruenceLine line;
        line.label = label;
        line.bound = Rat(bound);
        line.lhs = val_p(diff, m.p);
        line.ok = line.lhs.inf || line.lhs.v >= line.bound;
        if (!line.ok) rep.all_ok = false;
        rep.lines.push_back(std::move(line));
    };
    for (int i = 2; i <= 7; ++i)
        push(ShiodaVector::names()[i - 2],
             rat_pow(pr, m.s * i) * sh[i - 2] - io[i - 2], m.s * (i + 1));
    push("D14", rat_pow(pr, 14 * m.s) * d14 - io[6], 15 * m.s);
    return rep;
}

} // namespace quartic
