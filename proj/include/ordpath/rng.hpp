#pragma once

// SplitMix64 — the named, explicitly seeded 64-bit generator used for
// every randomized fixture, so seeds are portable across
// implementations. Reference: Steele, Lea, Flood (2014), as published in
// the Java 8 SplittableRandom.

#include <cstdint>

#include "ordpath/core.hpp"

namespace ordpath {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53 bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Host with each chord slot (lexicographic pair order) kept with
// probability `density`, one SplitMix64 draw per slot.
inline PathGraph random_host(int n, double density, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (rng.next_double() < density) chords.emplace_back(i, j);
    return PathGraph(n, std::move(chords));
}

}  // namespace ordpath
