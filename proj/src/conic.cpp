#include "quartic/conic.hpp"

namespace quartic {

std::array<std::array<Rat, 3>, 3> conic_gram(const TernaryForm& Q) {
    auto [a, b, c, d, e, f] = conic_coeffs(Q);
    Rat h(1, 2);
    return {{{a, d * h, e * h}, {d * h, b, f * h}, {e * h, f * h, c}}};
}

std::optional<std::pair<TernaryFormT<Fp>, Fp>>
conic_square_root(const TernaryFormT<Fp>& F) {
    if (is_zero(F)) return std::nullopt;
    Mono3 lead = F.leading_monomial();
    for (int e : lead)
        if (e % 2) return std::nullopt;
    Fp c = F.leading_coeff();
    Mono3 half = {lead[0] / 2, lead[1] / 2, lead[2] / 2};
    Fp one = c / c;
    auto q = TernaryFormT<Fp>::monomial(half, one);
    auto residual = [&]() { return F - (q * q).scaled(c); };
    TernaryFormT<Fp> R = residual();
    Fp twoc = c + c;
    while (!is_zero(R)) {
        Mono3 m = R.leading_monomial();
        Mono3 t;
        for (int i = 0; i < 3; ++i) {
            t[i] = m[i] - half[i];
            if (t[i] < 0) return std::nullopt;
        }
        q = q + TernaryFormT<Fp>::monomial(t, R.leading_coeff() / twoc);
        R = residual();
    }
    return std::make_pair(q, c);
}

std::optional<TernaryFormT<Fp>> divide_exact(const TernaryFormT<Fp>& num,
                                             const TernaryFormT<Fp>& den) {
    if (is_zero(den)) return std::nullopt;
    Mono3 dm = den.leading_monomial();
    Fp dc = den.leading_coeff();
    TernaryFormT<Fp> quot, R = num;
    while (!is_zero(R)) {
        Mono3 m = R.leading_monomial();
        Mono3 t;
        for (int i = 0; i < 3; ++i) {
            t[i] = m[i] - dm[i];
            if (t[i] < 0) return std::nullopt;
        }
        auto term = TernaryFormT<Fp>::monomial(t, R.leading_coeff() / dc);
        quot = quot + term;
        R = R - den * term;
    }
    return quot;
}

} // namespace quartic
