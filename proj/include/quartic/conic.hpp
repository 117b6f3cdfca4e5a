#pragma once

#include "quartic/forms.hpp"
#include "quartic/fp.hpp"

#include <array>
#include <optional>

namespace quartic {

// Conic coefficients in the order x1^2, x2^2, x3^2, x1x2, x1x3, x2x3.
template <class C>
std::array<C, 6> conic_coeffs(const TernaryFormT<C>& Q) {
    return {Q.coeff({2, 0, 0}), Q.coeff({0, 2, 0}), Q.coeff({0, 0, 2}),
            Q.coeff({1, 1, 0}), Q.coeff({1, 0, 1}), Q.coeff({0, 1, 1})};
}

// Discriminant 4abc + def - a f^2 - b e^2 - c d^2 of a ternary conic.
template <class C>
C conic_d3(const TernaryFormT<C>& Q) {
    auto [a, b, c, d, e, f] = conic_coeffs(Q);
    return a * b * c * 4 + d * e * f - a * f * f - b * e * e - c * d * d;
}

// Symmetric Gram matrix with halved off-diagonal entries.
std::array<std::array<Rat, 3>, 3> conic_gram(const TernaryForm& Q);

// Decomposition F = c * q^2 of a quartic over F_p (p odd), q monic at its
// leading graded-lex monomial. Degenerate conics (e.g. x1^4 -> (x1^2, 1))
// are allowed; absence of a decomposition is a regular result.
std::optional<std::pair<TernaryFormT<Fp>, Fp>>
conic_square_root(const TernaryFormT<Fp>& F);

// Quotient of exact multivariate division, if the divisor divides.
std::optional<TernaryFormT<Fp>> divide_exact(const TernaryFormT<Fp>& num,
                                             const TernaryFormT<Fp>& den);

} // namespace quartic
