#pragma once

#include <cstdint>

namespace superw {

/// splitmix64. Used instead of <random> distributions because the randomized
/// property suites must be byte-reproducible across platforms and standard
/// library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// uniform integer in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace superw
