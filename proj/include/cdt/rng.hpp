#pragma once

#include <cstdint>
#include <random>

namespace cdt {

// All generators use one mt19937_64 seeded per call; bounded draws go through
// rejection sampling so corpora do not depend on std::uniform_int_distribution
// internals.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Bernoulli(p) with p given as a double in [0,1].
inline bool chance(Rng& rng, double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return (rng() >> 11) * 0x1.0p-53 < p;
}

} // namespace cdt
