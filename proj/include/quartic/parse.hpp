#pragma once

#include "quartic/forms.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Polynomial in x, y, z (standing for x1, x2, x3) with integer or rational
// coefficients. Supports + - * / ^ and parentheses; multiplication may be
// implicit before a variable or '(' ("2x(y+z)"), and '/' requires a constant
// divisor. Throws ParseError with the offending position.
TernaryForm parse_ternary_polynomial(const std::string& text);

// "p", "-p/q", surrounding whitespace allowed.
Rat parse_rational(const std::string& text);

// The 15 quartic exponent triples in the documented order, largest first:
// (4,0,0), (3,1,0), (3,0,1), (2,2,0), (2,1,1), (2,0,2), (1,3,0), (1,2,1),
// (1,1,2), (1,0,3), (0,4,0), (0,3,1), (0,2,2), (0,1,3), (0,0,4).
const std::vector<Mono3>& quartic_monomial_order();

TernaryForm quartic_from_coefficients(const std::vector<Rat>& slots);
std::vector<Rat> quartic_coefficients(const TernaryForm& F);

// Expression string, or "[c0, c1, ..., c14]" in the documented slot order.
// Validates the result is a nonzero homogeneous quartic.
TernaryForm parse_quartic_input(const std::string& text);

} // namespace quartic
