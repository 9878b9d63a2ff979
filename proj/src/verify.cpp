#include "eqcolor/verify.hpp"

#include <algorithm>
#include <sstream>

#include "eqcolor/errors.hpp"

namespace eqcolor {

VerifyReport verify_coloring(const Graph& g, const std::vector<int>& colors, int r) {
    int n = g.vertex_count();
    if (static_cast<int>(colors.size()) != n)
        throw PreconditionViolation("verify: expected " + std::to_string(n) +
                                    " colors, got " + std::to_string(colors.size()));
    if (r < 1) throw PreconditionViolation("verify: r must be at least 1");
    for (int v = 0; v < n; ++v)
        if (colors[v] < 1 || colors[v] > r)
            throw PreconditionViolation("verify: color of vertex " + std::to_string(v) +
                                        " is " + std::to_string(colors[v]) +
                                        ", outside 1.." + std::to_string(r));
    VerifyReport rep;
    rep.class_sizes.assign(r, 0);
    for (int v = 0; v < n; ++v) ++rep.class_sizes[colors[v] - 1];
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) {
            rep.proper = false;
            rep.conflict_edges.emplace_back(u, v);
        }
    int lo = *std::min_element(rep.class_sizes.begin(), rep.class_sizes.end());
    int hi = *std::max_element(rep.class_sizes.begin(), rep.class_sizes.end());
    rep.equitable = hi - lo <= 1;
    std::ostringstream os;
    if (!rep.proper) os << rep.conflict_edges.size() << " same-color edges; ";
    if (!rep.equitable) os << "class sizes range " << lo << ".." << hi << "; ";
    if (rep.ok()) os << "proper and equitable";
    rep.detail = os.str();
    return rep;
}

namespace {

struct OracleSearch {
    const Graph* g;
    int n, r, cap_hi, cap_lo;
    std::vector<int> order;   // vertices, high degree first
    std::vector<int> color;   // per vertex, -1 open
    std::vector<int> count;   // per class
    int used = 0;             // number of classes touched so far

    bool feasible_counts(int placed) const {
        // every class must still be able to reach the floor size
        int deficit = 0;
        for (int c = 0; c < r; ++c) deficit += std::max(0, cap_lo - count[c]);
        return deficit <= n - placed;
    }

    bool rec(int idx) {
        if (idx == n) return true;
        int v = order[idx];
        int limit = std::min(r, used + 1);  // fresh classes are interchangeable
        for (int c = 0; c < limit; ++c) {
            if (count[c] >= cap_hi) continue;
            bool clash = false;
            for (int w : g->neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            ++count[c];
            int prev_used = used;
            used = std::max(used, c + 1);
            if (feasible_counts(idx + 1) && rec(idx + 1)) return true;
            used = prev_used;
            --count[c];
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> oracle_equitable(const Graph& g, int r, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw InstanceTooLarge("oracle: n=" + std::to_string(n) + " exceeds cap " +
                               std::to_string(cap));
    if (r < 1) throw PreconditionViolation("oracle: r must be at least 1");
    if (n == 0) return std::vector<int>{};
    OracleSearch s;
    s.g = &g;
    s.n = n;
    s.r = r;
    s.cap_hi = (n + r - 1) / r;
    s.cap_lo = n / r;
    s.order.resize(n);
    for (int v = 0; v < n; ++v) s.order[v] = v;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    s.color.assign(n, -1);
    s.count.assign(r, 0);
    if (!s.rec(0)) return std::nullopt;
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = s.color[v] + 1;
    return out;
}

}  // namespace eqcolor
