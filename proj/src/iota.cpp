#include "quartic/iota.hpp"

namespace quartic {

const std::array<const char*, IOTA_COUNT>& IotaVector::names() {
    static const std::array<const char*, IOTA_COUNT> n = {
        "iota6", "iota9", "iota12", "iota15", "iota18", "iota21", "iota42"};
    return n;
}

const std::array<int, IOTA_COUNT>& IotaVector::weights() {
    static const std::array<int, IOTA_COUNT> w = {6, 9, 12, 15, 18, 21, 42};
    return w;
}

IotaVector iota_invariants(const DixmierOhnoVector& inv) {
    const Rat &I3 = inv[0], &I6 = inv[1], &I9 = inv[2], &J9 = inv[3];
    const Rat &I12 = inv[4], &J12 = inv[5], &I15 = inv[6], &J15 = inv[7];
    const Rat& I27 = inv[12];
    auto P = [](long b, long e) { return rat_pow(Rat(b), e); };

    Rat i6 = Rat(9, 32 * 5 * 7) * (I3 * I3 - I6 * 180);

    Rat i9 = P(3, 5) / (P(2, 9) * P(5, 2) * P(7, 3))
             * (rat_pow(I3, 3) * 14 - I3 * I6 * 2520 - I9 * 81 + J9 * 135);

    Rat i12 = P(3, 3) / (P(2, 14) * 5 * P(7, 3)) * I3
                  * (rat_pow(I3, 3) * -32 + I3 * I6 * 14580 + I9 * 261 - J9 * 495)
              + P(5, 2) / (2 * 3 * 49) * i6 * i6;

    Rat i15 = P(3, 4) / (P(2, 16) * P(5, 2) * P(7, 5)) * I3
                  * (rat_pow(I3, 4) * -592 + I3 * I3 * I6 * 30780
                     + I3 * I9 * 2601 - I3 * J9 * 45 + I6 * I6 * 7290000
                     - J12 * 2430)
              + Rat(25, 63) * i6 * i9;

    Rat i18 = P(3, 8) / (P(2, 24) * P(5, 2) * P(7, 4)) * I3 * I3
                  * (rat_pow(I3, 4) * -8 - I3 * I3 * I6 * 14418 - I3 * I9 * 117
                     + I3 * J9 * 423 + I6 * I6 * 155520 - I12 * 486)
              + P(17, 3) / (P(2, 6) * 9 * P(7, 3)) * rat_pow(i6, 3)
              + Rat(15, 32) * i9 * i9
              - Rat(17, 56) * i6 * i12;

    Rat i21 = P(3, 7) / (P(2, 44) * P(5, 7) * P(7, 5)) * I3 * I3
                  * (rat_pow(I3, 5) * -128 + rat_pow(I3, 3) * I6 * 213912
                     + I3 * I3 * I9 * 2961 - I3 * I3 * J9 * 8541
                     - I3 * I6 * I6 * 18057600 + I3 * I12 * 12204
                     + I3 * J12 * 810 - I6 * I9 * 45360 + I6 * J9 * 285120
                     - I15 * 4860 - J15 * 540)
              + Rat(250, 27 * 49) * i6 * i6 * i9
              - Rat(13, 18) * i9 * i12
              - Rat(17, 84) * i6 * i15;

    Rat i42 = P(3, 10) / (P(2, 18) * P(5, 5)) * rat_pow(I3, 5) * I27;

    IotaVector out;
    out.v = {i6, i9, i12, i15, i18, i21, i42};
    return out;
}

} // namespace quartic
