#pragma once

#include <cstdint>
#include <random>

namespace dca {

// All stochastic behaviour flows through these helpers so that a run is
// reproducible bit-for-bit from its seed alone, and so that reference
// simulations can mirror the exact draw sequence.
using Rng = std::mt19937_64;

// splitmix64 finaliser keyed by index; derives independent per-run seeds
// from a master seed so repetitions do not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi); returns lo for a degenerate range.
inline double uniform_in(Rng& rng, double lo, double hi) {
    return lo + uniform_unit(rng) * (hi - lo);
}

// Unbiased uniform index in [0, n), n > 0 (Lemire rejection).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const unsigned __int128 product =
            static_cast<unsigned __int128>(rng()) * bound;
        if (static_cast<std::uint64_t>(product) >= threshold)
            return static_cast<std::size_t>(product >> 64);
    }
}

}  // namespace dca
