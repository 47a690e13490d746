#pragma once

#include <cstdint>

namespace richwords {

// SplitMix64.  The randomized suites need identical streams on every
// platform and run, so std::random distributions are out.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, bound); bias is irrelevant at our bounds.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace richwords
