#pragma once

#include <cstdint>
#include <string>

#include "eqcolor/graph.hpp"

namespace eqcolor {

// splitmix64; the full generator state is one 64-bit word, so a seed
// pins the stream across platforms and languages.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection; bound > 0
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double unit() { return (next() >> 11) * 0x1.0p-53; }
};

// Random d-degenerate graph: vertex i links to min(d, i) distinct
// predecessors chosen uniformly.  d = 1 gives a random tree.
Graph gen_d_degenerate(int n, int d, std::uint64_t seed);

// Erdos-Renyi G(n, p).
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Fixed families: "complete" a, "complete_bipartite" a b, "cycle" a,
// "path" a, "star" a (a leaves), "empty" a.
Graph gen_named(const std::string& kind, int a, int b = 0);

}  // namespace eqcolor
