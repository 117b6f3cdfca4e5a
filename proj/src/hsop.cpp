#include "quartic/hsop.hpp"

namespace quartic {

namespace {

HsopEntry slot(const char* label, int weight, int index) {
    return {label, weight, [index](const DixmierOhnoVector& d) { return d[index]; }};
}

} // namespace

HsopCatalog hsop_catalog(long p) {
    if (p == 2 || p == 3)
        throw UnsupportedPrime("no parameter catalog in characteristic " + std::to_string(p));

    // Slot indices in catalog order: I3 I6 I9 J9 I12 J12 I15 J15 I18 J18 I21 J21 I27.
    HsopEntry I3 = slot("I3", 3, 0), I6 = slot("I6", 6, 1);
    HsopEntry I12 = slot("I12", 12, 4), I18 = slot("I18", 18, 8);
    HsopEntry I27 = slot("I27", 27, 12);

    if (p == 5) {
        HsopEntry I9_5 = {"(J9+3*I9)/5", 9, [](const DixmierOhnoVector& d) -> Rat {
                              return (d[3] + d[2] * 3) / 5;
                          }};
        HsopEntry J15_5 = {"J15^(5)", 15, [](const DixmierOhnoVector& d) -> Rat {
            const Rat &I3 = d[0], &I6 = d[1], &I9 = d[2], &J9 = d[3];
            const Rat &I12 = d[4], &J12 = d[5], &I15 = d[6], &J15 = d[7];
            Rat main = rat_pow(I3, 3) * I6 * -64 - I3 * I6 * I6 * 24
                     + I3 * I12 * 39 - I3 * J12 * 11 + I6 * I9 * 42
                     - I6 * J9 * 21 - I15 * 1143 + J15;
            Rat corr = I3 * I3 * (I9 * 253 - J9 * 79);
            return main / 125 + corr / 625;
        }};
        return {p, {I3, I6, I9_5, I12, J15_5, I18, I27}};
    }
    if (p == 7 || p == 19 || p == 47 || p == 277 || p == 523) {
        HsopEntry diff = {"I9-J9", 9, [](const DixmierOhnoVector& d) -> Rat {
                              return d[2] - d[3];
                          }};
        return {p, {I3, I6, diff, I12, slot("I15", 15, 6), I18, I27}};
    }
    return {0, {I3, I6, slot("I9", 9, 2), I12, slot("I15", 15, 6), I18, I27}};
}

} // namespace quartic
