#pragma once

#include "quartic/forms.hpp"

#include <vector>

namespace quartic {

// Fraction-free determinant with row pivoting; consumes its argument.
Int det_bareiss(std::vector<std::vector<Int>> a);

// Determinant of a rational matrix (clears row denominators, then Bareiss).
Rat det_rational(const std::vector<std::vector<Rat>>& a);

// Resultant of two univariate polynomials, coefficient i on x^i, by the
// subresultant PRS. Zero polynomials give 0.
Rat resultant_univariate(std::vector<Rat> f, std::vector<Rat> g);

// Resultant of two binary forms at their formal degrees (Sylvester
// determinant); correct also when leading coefficients vanish.
Rat resultant_binary(const BinaryForm& f, const BinaryForm& g);

// Resultant of three ternary cubics via the Macaulay quotient det M / det M'.
// When det M' = 0 the quotient is recovered from det(M + t I) / det(M' + t I):
// adding t on the diagonal perturbs each cubic's x_i^3 coefficient by t, so
// the identity det = Res * det' still holds along t and the division is exact.
Rat macaulay_resultant_cubics(const TernaryForm& f1, const TernaryForm& f2,
                              const TernaryForm& f3);

} // namespace quartic
