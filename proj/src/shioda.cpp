#include "quartic/shioda.hpp"

#include "quartic/resultant.hpp"

namespace quartic {

BinaryQuarticInvariants binary_quartic_invariants(const BinaryForm& q) {
    if (q.degree() != 4 || q[0] != 1 || q[1] != 0)
        throw std::domain_error(
            "binary_quartic_invariants: expected x^4 + a x^2 z^2 + b x z^3 + c z^4");
    const Rat &a = q[2], &b = q[3], &c = q[4];
    BinaryQuarticInvariants out;
    out.q2 = a * a + c * 12;
    out.q3 = a * a * a * -2 + a * c * 72 - b * b * 27;
    out.d6 = (rat_pow(out.q2, 3) * 4 - out.q3 * out.q3) / 27;
    return out;
}

Rat binary_octic_discriminant(const BinaryForm& f) {
    if (f.degree() != 8) throw std::domain_error("binary_octic_discriminant: octic expected");
    return -resultant_binary(f.diff_x(), f.diff_z()) / rat_pow(2, 18);
}

} // namespace quartic
