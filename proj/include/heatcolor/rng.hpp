#pragma once

#include <cstdint>
#include <random>

namespace heatcolor {

// All stochastic components draw from this generator. The generator name is
// recorded in run records so results can be reproduced.
using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64";

// 53-bit uniform in [0,1). Derived from raw engine output so the stream does
// not depend on the standard library's distribution implementation.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, bound), bound >= 1.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace heatcolor
