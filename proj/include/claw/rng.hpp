#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace claw {

// All randomized routines take the generator explicitly; a fixed seed gives a
// reproducible run.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound). Rejection sampling on the raw 64-bit
/// output, so draws are identical across standard library implementations
/// (std::uniform_int_distribution makes no such promise).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::logic_error("uniform_below: empty range");
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

/// Uniform double in [0, 1) from 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Stateless seed derivation for independent substreams (splitmix64 finisher).
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1) + 0x94d049bb133111ebULL * (c + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

template <class It>
void shuffle_range(It first, It last, Rng& rng) {
    const auto len = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = len; i > 1; --i) {
        using std::swap;
        swap(first[i - 1], first[uniform_below(rng, i)]);
    }
}

}  // namespace claw
