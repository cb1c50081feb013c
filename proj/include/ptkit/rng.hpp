#pragma once

#include <cstdint>

namespace ptkit {

/// SplitMix64: fixed-constant 64-bit mixing generator. Pure integer
/// arithmetic, so identical seeds give identical streams on every platform,
/// which keeps randomized verification runs bit-reproducible.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, n); n is tiny compared to 2^64 here, so the
    /// modulo bias is irrelevant.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (next() & 1) != 0; }

    /// Stream-splitting helper: derives an independent child seed.
    std::uint64_t fork_seed() { return next(); }
};

}  // namespace ptkit
