#include "eqcolor/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <sstream>

#include "eqcolor/errors.hpp"

namespace eqcolor {

Rational rational_from_double(double x, std::int64_t max_den) {
    if (x < 0) {
        Rational r = rational_from_double(-x, max_den);
        return Rational(-r.num, r.den);
    }
    // continued fraction convergents h/k
    std::int64_t h0 = 1, k0 = 0;  // h_{-1}/k_{-1}
    std::int64_t h1 = static_cast<std::int64_t>(std::floor(x));
    std::int64_t k1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64 && frac > 1e-12; ++it) {
        double inv = 1.0 / frac;
        std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
        if (a <= 0) break;
        if (k0 + a * k1 > max_den) break;
        std::int64_t h2 = h0 + a * h1;
        std::int64_t k2 = k0 + a * k1;
        h0 = h1; k0 = k1; h1 = h2; k1 = k2;
        frac = inv - static_cast<double>(a);
    }
    return Rational(h1, k1);
}

namespace {

// Dinic max-flow, int64 capacities.
class Flow {
public:
    explicit Flow(int n) : head_(n) {}

    void add(int u, int v, std::int64_t cap) {
        head_[u].push_back(static_cast<int>(es_.size()));
        es_.push_back({v, cap});
        head_[v].push_back(static_cast<int>(es_.size()));
        es_.push_back({u, 0});
    }

    std::int64_t run(int s, int t) {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            it_.assign(head_.size(), 0);
            std::int64_t f;
            while ((f = dfs(s, t, INT64_MAX)) > 0) total += f;
        }
        return total;
    }

    // source side of the min cut, after run()
    std::vector<char> cut_side(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int ei : head_[u]) {
                const auto& e = es_[ei];
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = 1;
                    q.push(e.to);
                }
            }
        }
        return seen;
    }

private:
    struct E {
        int to;
        std::int64_t cap;
    };
    std::vector<std::vector<int>> head_;
    std::vector<E> es_;
    std::vector<int> level_, it_;

    bool bfs(int s, int t) {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int ei : head_[u]) {
                const auto& e = es_[ei];
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    q.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t pushed) {
        if (u == t) return pushed;
        for (int& i = it_[u]; i < static_cast<int>(head_[u].size()); ++i) {
            int ei = head_[u][i];
            auto& e = es_[ei];
            if (e.cap > 0 && level_[e.to] == level_[u] + 1) {
                std::int64_t f = dfs(e.to, t, std::min(pushed, e.cap));
                if (f > 0) {
                    e.cap -= f;
                    es_[ei ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }
};

long long edges_within(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : verts) in[v] = 1;
    long long e = 0;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (w > v && in[w]) ++e;
    return e;
}

// Is there a nonempty S with e(S)/|S| > p/q?  Builds the standard density
// network: cut value for source side S is q*m*n - 2*(q*e(S) - p*|S|), so
// max-flow < q*m*n exposes such an S.
bool denser_than(const Graph& g, std::int64_t p, std::int64_t q,
                 std::vector<int>* witness) {
    int n = g.vertex_count();
    std::int64_t m = g.edge_count();
    Flow f(n + 2);
    int s = n, t = n + 1;
    for (int v = 0; v < n; ++v) {
        f.add(s, v, m * q);
        f.add(v, t, m * q + 2 * p - static_cast<std::int64_t>(g.degree(v)) * q);
    }
    for (auto [u, v] : g.edges()) {
        f.add(u, v, q);
        f.add(v, u, q);
    }
    std::int64_t cut = f.run(s, t);
    std::int64_t whole = m * q * n;
    if (cut >= whole) return false;
    if (witness) {
        auto side = f.cut_side(s);
        witness->clear();
        for (int v = 0; v < n; ++v)
            if (side[v]) witness->push_back(v);
    }
    return true;
}

}  // namespace

DensestSubgraph densest_subgraph(const Graph& g) {
    DensestSubgraph out;
    int n = g.vertex_count();
    if (n == 0 || g.edge_count() == 0) {
        out.density = Rational(0, 1);
        if (n > 0) out.vertices = {0};
        return out;
    }
    // overflow guard for the scaled capacities
    double iter_bound = std::log2(double(g.max_degree() + 1) * n * (n - 1)) + 2;
    double worst = double(g.edge_count()) * n * std::pow(2.0, iter_bound);
    if (worst > 8.0e18)
        throw InstanceTooLarge("densest_subgraph: instance too large for exact search");

    std::vector<int> best;
    for (int v = 0; v < n && best.empty(); ++v)
        if (g.degree(v) > 0) best = {v, *g.neighbors(v).begin()};

    // Dyadic binary search over lo_p/q .. hi_p/q.  Some S beats lo, none
    // beats hi; once hi - lo is below the minimum spacing of achievable
    // densities, the last witness is exactly optimal.
    std::int64_t lo_p = 0, hi_p = g.max_degree() + 1, q = 2;
    while (static_cast<__int128>(hi_p - lo_p) * n * (n - 1) >= q) {
        std::int64_t mid = lo_p + hi_p;  // over 2q
        std::vector<int> w;
        if (denser_than(g, mid, 2 * q, &w)) {
            lo_p = mid;
            hi_p *= 2;
            best = std::move(w);
        } else {
            hi_p = mid;
            lo_p *= 2;
        }
        q *= 2;
    }
    out.vertices = best;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.density = Rational(edges_within(g, out.vertices),
                           static_cast<std::int64_t>(out.vertices.size()));
    return out;
}

Rational max_subgraph_density(const Graph& g) { return densest_subgraph(g).density; }

Rational max_subgraph_density_exhaustive(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw InstanceTooLarge("exhaustive density: n=" + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
    if (n == 0) return Rational(0, 1);
    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    Rational best(0, 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int e = 0;
        for (std::uint32_t rest = mask; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            e += __builtin_popcount(adj[v] & rest);  // each edge at lower endpoint
        }
        Rational d(e, __builtin_popcount(mask));
        if (best < d) best = d;
    }
    return best;
}

namespace {

struct BipSearch {
    const Graph* g;
    int n;
    std::vector<int> vert;          // search order, by descending degree
    std::vector<long long> suffix;  // edges with an endpoint at position >= i
    std::vector<int> side;          // per vertex: -1 out, 0 A, 1 B
    long long cross = 0;
    int taken = 0;
    Rational best{0, 1};
    std::vector<int> best_a, best_b;

    void consider() {
        if (taken == 0) return;
        Rational d(cross, taken);
        if (best < d) {
            best = d;
            best_a.clear();
            best_b.clear();
            for (int v = 0; v < n; ++v) {
                if (side[v] == 0) best_a.push_back(v);
                if (side[v] == 1) best_b.push_back(v);
            }
        }
    }

    void rec(int i, bool any_placed) {
        consider();
        if (i == n) return;
        // bound: no extension beats (cross + remaining edges) / current size
        if (taken > 0) {
            Rational bound(cross + suffix[i], taken);
            if (bound <= best) return;
        }
        int v = vert[i];
        side[v] = -1;
        rec(i + 1, any_placed);
        // a bipartite subgraph keeps only the cross edges, so same-side
        // adjacency is allowed; those edges are just left out
        for (int s = 0; s < (any_placed ? 2 : 1); ++s) {
            side[v] = s;
            long long add = 0;
            for (int w : g->neighbors(v))
                if (side[w] == 1 - s) ++add;
            cross += add;
            ++taken;
            rec(i + 1, true);
            --taken;
            cross -= add;
        }
        side[v] = -1;
    }
};

}  // namespace

BipartiteDensity max_bipartite_subgraph_density(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw InstanceTooLarge("bipartite density: n=" + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
    BipartiteDensity out;
    out.density = Rational(0, 1);
    if (n == 0) return out;
    BipSearch s;
    s.g = &g;
    s.n = n;
    s.vert.resize(n);
    for (int v = 0; v < n; ++v) s.vert[v] = v;
    std::stable_sort(s.vert.begin(), s.vert.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    s.suffix.assign(n + 1, 0);
    {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[s.vert[i]] = i;
        // suffix[i] = edges with an endpoint at position >= i; each edge is
        // charged to its later endpoint
        for (int i = n - 1; i >= 0; --i) {
            long long cnt = 0;
            for (int w : g.neighbors(s.vert[i]))
                if (pos[w] < i) ++cnt;
            s.suffix[i] = s.suffix[i + 1] + cnt;
        }
    }
    s.side.assign(n, -1);
    s.rec(0, false);
    out.density = s.best;
    out.side_a = s.best_a;
    out.side_b = s.best_b;
    if (out.side_a.empty() && out.side_b.empty() && n > 0) out.side_a = {0};
    return out;
}

MembershipReport check_membership(const Graph& g, double m1, double m2,
                                  int bipartite_cap) {
    MembershipReport rep;
    Rational t1 = rational_from_double(m1);
    Rational t2 = rational_from_double(m2);
    DensestSubgraph ds = densest_subgraph(g);
    rep.density = ds.density;
    std::ostringstream detail;
    bool ok = true;
    if (t1 < ds.density) {
        ok = false;
        rep.violating_set = ds.vertices;
        detail << "subgraph on " << ds.vertices.size() << " vertices has density "
               << ds.density.str() << " > m1=" << t1.str() << "; ";
    }
    if (g.vertex_count() <= bipartite_cap) {
        BipartiteDensity bd = max_bipartite_subgraph_density(g, bipartite_cap);
        rep.bipartite_checked = true;
        rep.bipartite_density = bd.density;
        if (t2 < bd.density) {
            ok = false;
            if (rep.violating_set.empty()) {
                rep.violating_set = bd.side_a;
                rep.violating_set.insert(rep.violating_set.end(), bd.side_b.begin(),
                                         bd.side_b.end());
                std::sort(rep.violating_set.begin(), rep.violating_set.end());
            }
            detail << "bipartite subgraph has density " << bd.density.str()
                   << " > m2=" << t2.str() << "; ";
        }
    } else {
        detail << "bipartite check skipped (n > " << bipartite_cap << "); ";
    }
    rep.member = ok;
    if (ok) detail << "all density bounds hold";
    rep.detail = detail.str();
    return rep;
}

}  // namespace eqcolor
