#pragma once

#include "quartic/dixmier_ohno.hpp"

namespace quartic {

inline constexpr std::size_t IOTA_COUNT = 7;

// iota6 .. iota21 plus the discriminant-carrying iota42.
struct IotaVector {
    std::array<Rat, IOTA_COUNT> v{};

    static const std::array<const char*, IOTA_COUNT>& names();  // iota6 ...
    static const std::array<int, IOTA_COUNT>& weights();        // 6 ... 42

    Rat& operator[](std::size_t i) { return v[i]; }
    const Rat& operator[](std::size_t i) const { return v[i]; }
    bool operator==(const IotaVector& o) const { return v == o.v; }
};

IotaVector iota_invariants(const DixmierOhnoVector& inv);

} // namespace quartic
