#pragma once

#include "quartic/dixmier_ohno.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

struct UnsupportedPrime : std::domain_error {
    explicit UnsupportedPrime(const std::string& what) : std::domain_error(what) {}
};

struct HsopEntry {
    std::string label;
    int weight;
    std::function<Rat(const DixmierOhnoVector&)> eval;
};

struct HsopCatalog {
    long p;  // 0 stands for the generic list
    std::vector<HsopEntry> entries;
};

// Seven-element parameter system for the invariants of ternary quartics in
// residue characteristic p. The generic list works away from the listed
// exceptional primes; p = 2 and p = 3 are rejected.
HsopCatalog hsop_catalog(long p);

} // namespace quartic
