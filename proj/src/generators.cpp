#include "eqcolor/generators.hpp"

#include <numeric>
#include <vector>

#include "eqcolor/errors.hpp"

namespace eqcolor {

Graph gen_d_degenerate(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0) throw PreconditionViolation("gen_d_degenerate: negative size");
    Graph g(n);
    SplitMix64 rng(seed);
    std::vector<int> pool;
    for (int i = 1; i < n; ++i) {
        int take = std::min(d, i);
        pool.resize(i);
        std::iota(pool.begin(), pool.end(), 0);
        // partial Fisher-Yates: the first `take` entries become the picks
        for (int k = 0; k < take; ++k) {
            int swap_at = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(i - k)));
            std::swap(pool[k], pool[swap_at]);
            g.add_edge(i, pool[k]);
        }
    }
    return g;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw PreconditionViolation("gen_gnp: bad arguments");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) g.add_edge(u, v);
    return g;
}

Graph gen_named(const std::string& kind, int a, int b) {
    if (a < 0 || b < 0) throw PreconditionViolation("gen_named: negative size");
    if (kind == "complete") {
        Graph g(a);
        for (int u = 0; u < a; ++u)
            for (int v = u + 1; v < a; ++v) g.add_edge(u, v);
        return g;
    }
    if (kind == "complete_bipartite") {
        Graph g(a + b);
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
        return g;
    }
    if (kind == "cycle") {
        if (a < 3) throw PreconditionViolation("gen_named: cycle needs length >= 3");
        Graph g(a);
        for (int u = 0; u < a; ++u) g.add_edge(u, (u + 1) % a);
        return g;
    }
    if (kind == "path") {
        Graph g(a);
        for (int u = 0; u + 1 < a; ++u) g.add_edge(u, u + 1);
        return g;
    }
    if (kind == "star") {
        Graph g(a + 1);
        for (int v = 1; v <= a; ++v) g.add_edge(0, v);
        return g;
    }
    if (kind == "empty") return Graph(a);
    throw PreconditionViolation("gen_named: unknown kind '" + kind + "'");
}

}  // namespace eqcolor
