#include "eqcolor/solver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <ostream>
#include <sstream>

#include "eqcolor/errors.hpp"

namespace eqcolor {

namespace {

std::string state_dump(const Graph& h, const EquitablePartition& p,
                       const ClassDigraph& d, const std::string& where) {
    std::ostringstream os;
    os << where << "\n" << p.dump() << "\n" << d.dump(p) << "\nedges:";
    for (auto [u, v] : h.edges()) os << " " << u << "-" << v;
    return os.str();
}

}  // namespace

bool place_vertex(const Graph& g, EquitablePartition& p, const ClassDigraph& d, int x) {
    for (int j = 0; j < p.r; ++j) {
        if (j == d.small || !d.accessible[j] || d.cnt[x][j] != 0) continue;
        auto path = shortest_class_path(d, j, d.small);
        std::vector<int> picks;
        for (size_t idx = 0; idx + 1 < path.size(); ++idx)
            picks.push_back(d.witnesses(path[idx], path[idx + 1], p).at(0));
        p.assign(x, j);
        switch_witnesses(g, p, path, picks);
        p.refresh_small();
        return true;
    }
    return false;
}

bool augment_friendly(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                      const SoloProfile& sp, const std::vector<int>& cover) {
    std::vector<char> in_cover(p.r, 0);
    for (int c : cover) in_cover[c] = 1;
    for (int i = 0; i < p.r; ++i) {
        if (!d.accessible[i] || i == d.small) continue;
        for (int u : p.classes[i]) {
            if (sp.solo[u].empty()) continue;
            for (int k = 0; k < p.r; ++k) {
                if (k == i || !d.accessible[k] || d.cnt[u][k] != 0) continue;
                for (int v : sp.solo[u]) {
                    if (!in_cover[p.class_of[v]]) continue;
                    int j = p.class_of[v];
                    // u vacates to V_k, v takes its solo slot in V_i
                    p.unassign(u);
                    p.move_vertex(v, i);
                    p.assign(u, k);
                    if (k == d.small) {
                        p.refresh_small();
                        return true;
                    }
                    // V_k is oversized; rebalance toward the old small class
                    ClassDigraph d2 = build_class_digraph(h, p);
                    auto path = shortest_class_path(d2, k, p.small);
                    if (path.empty()) {
                        // no live rebalancing path; undo and keep looking
                        p.unassign(u);
                        p.move_vertex(v, j);
                        p.assign(u, i);
                        continue;
                    }
                    std::vector<int> picks;
                    for (size_t idx = 0; idx + 1 < path.size(); ++idx)
                        picks.push_back(d2.witnesses(path[idx], path[idx + 1], p).at(0));
                    switch_witnesses(h, p, path, picks);
                    p.refresh_small();
                    return true;
                }
            }
        }
    }
    return false;
}

bool augment_claim2(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                    const SoloProfile& sp, int terminal) {
    int t = terminal;
    for (int u : p.classes[t]) {
        if (sp.nice[u].empty()) continue;
        if (d.a >= 2) {
            // the swapped class stays accessible only through some other
            // movable vertex of the terminal
            bool have = false;
            for (int u2 : p.classes[t]) {
                if (u2 == u) continue;
                for (int k = 0; k < p.r && !have; ++k)
                    if (k != t && d.accessible[k] && d.cnt[u2][k] == 0) have = true;
                if (have) break;
            }
            if (!have) continue;
        }
        for (int v : sp.nice[u]) {
            int j = p.class_of[v];
            if (d.cnt[u][j] != 1) continue;
            for (int w : sp.solo[u]) {
                if (w == v || p.class_of[w] == j || h.has_edge(v, w)) continue;
                // swap u and v; w's arc into the refilled terminal is the
                // new access
                p.unassign(u);
                p.move_vertex(v, t);
                p.assign(u, j);
                p.refresh_small();
                return true;
            }
        }
    }
    return false;
}

void augment_final(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                   const SoloProfile& sp, const std::vector<int>& cover, int terminal,
                   const SparsityParams& params, int r, bool paranoid,
                   FinalMoveInfo* info) {
    const double tol = 1e-9;
    int t = terminal;
    std::vector<char> in_cover(p.r, 0);
    for (int c : cover) in_cover[c] = 1;

    int ustar = -1;
    double best = -1;
    for (int u : p.classes[t]) {
        double wgt = vertex_weight(h, p, d, in_cover, u);
        if (wgt > best + tol) {
            best = wgt;
            ustar = u;
        }
    }
    if (ustar < 0)
        throw TheoremViolation("final move: empty terminal class",
                               state_dump(h, p, d, "augment_final"));

    FinalMoveInfo local;
    FinalMoveInfo& fi = info ? *info : local;
    fi.u_star = ustar;
    fi.weight = best;
    for (int v : sp.solo[ustar])
        (in_cover[p.class_of[v]] ? fi.l1 : fi.l2)++;
    for (int j = 0; j < p.r; ++j) {
        if (d.accessible[j]) continue;
        int e = d.cnt[ustar][j];
        if (e == 0)
            ++fi.n0;
        else if (e == 1)
            ++fi.n1;
        else
            ++fi.n2plus;
    }

    int fa = params.floor_a0;
    if (paranoid) {
        int q = static_cast<int>(sp.solo[ustar].size());
        int qn = static_cast<int>(sp.nice[ustar].size());
        if (best < 2.0 * r - 2.0 * fa - tol)
            throw TheoremViolation("final move: weight of u* below 2r-2*floor(a0)",
                                   state_dump(h, p, d, "augment_final u*=" +
                                                           std::to_string(ustar)));
        if (fi.l1 < params.r0 - 2.0 * fa - tol)
            throw TheoremViolation("final move: cover solo count below r0-2*floor(a0)",
                                   state_dump(h, p, d, "augment_final u*=" +
                                                           std::to_string(ustar)));
        if (fi.l2 > 2.0 * fa + tol)
            throw TheoremViolation("final move: non-cover solo count above 2*floor(a0)",
                                   state_dump(h, p, d, "augment_final u*=" +
                                                           std::to_string(ustar)));
        if (q >= params.r0 - 2.0 * fa - tol && qn < params.beta * q - tol)
            throw TheoremViolation("final move: nice solo fraction below beta",
                                   state_dump(h, p, d, "augment_final u*=" +
                                                           std::to_string(ustar)));
    }

    if (d.a >= 2) {
        // the terminal must stay accessible after u* leaves
        bool have = false;
        for (int u2 : p.classes[t]) {
            if (u2 == ustar) continue;
            for (int k = 0; k < p.r && !have; ++k)
                if (k != t && d.accessible[k] && d.cnt[u2][k] == 0) have = true;
            if (have) break;
        }
        if (!have)
            throw TheoremViolation("final move: no second movable vertex in terminal",
                                   state_dump(h, p, d, "augment_final"));
    }

    int v = -1, w = -1;
    for (int cand : sp.nice[ustar]) {
        if (!in_cover[p.class_of[cand]]) continue;
        for (int pw : sp.solo[ustar]) {
            if (pw == cand || h.has_edge(cand, pw)) continue;
            v = cand;
            w = pw;
            break;
        }
        if (v >= 0) break;
    }
    if (v < 0)
        throw TheoremViolation("final move: no nice solo neighbor inside the cover",
                               state_dump(h, p, d, "augment_final u*=" +
                                                       std::to_string(ustar)));
    int j = p.class_of[v];
    int iw = p.class_of[w];

    int k = -1;
    for (int c : cover)
        if (d.cnt[ustar][c] == 0) {
            k = c;
            break;
        }
    if (k < 0)
        throw TheoremViolation("final move: every cover class sees u*",
                               state_dump(h, p, d, "augment_final u*=" +
                                                       std::to_string(ustar)));

    auto path = shortest_class_path(d, k, j, &in_cover);
    if (path.empty())
        throw TheoremViolation("final move: cover classes not mutually reachable",
                               state_dump(h, p, d, "augment_final"));
    if (iw != j) {
        auto hit = std::find(path.begin(), path.end(), iw);
        if (hit != path.end()) {
            // reroute: stop at w's class and let v play the partner role
            std::swap(v, w);
            std::swap(j, iw);
            path.resize(static_cast<size_t>(hit - path.begin()) + 1);
        }
    }
    fi.v = v;
    fi.w = w;
    fi.k = k;
    fi.path = path;

    std::vector<int> picks;
    for (size_t idx = 0; idx + 1 < path.size(); ++idx)
        picks.push_back(d.witnesses(path[idx], path[idx + 1], p).at(0));

    p.unassign(ustar);
    p.assign(ustar, k);
    switch_witnesses(h, p, path, picks);
    p.move_vertex(v, t);
    p.refresh_small();
}

ConflictResolver::ConflictResolver(const Graph& g, EquitablePartition& p, int x,
                                   const SparsityParams& params,
                                   const SolveOptions& opts, SolveStats* stats)
    : g_(g), p_(p), x_(x), params_(params), opts_(opts), stats_(stats) {}

void ConflictResolver::trace_step(int iter, int a, const std::string& move) {
    if (!opts_.trace) return;
    auto& os = *opts_.trace;
    os << "{\"event\":\"conflict_step\",\"conflict\":"
       << (stats_ ? stats_->conflicts : 0) << ",\"iter\":" << iter << ",\"a\":" << a
       << ",\"move\":\"" << move << "\",\"sizes\":[";
    for (int i = 0; i < p_.r; ++i) os << (i ? "," : "") << p_.size_of(i);
    os << "]}\n";
}

void ConflictResolver::run() {
    for (int iter = 0;; ++iter) {
        ClassDigraph d = build_class_digraph(g_, p_);
        if (!a_hist_.empty() && d.a <= a_hist_.back())
            throw TheoremViolation(
                "conflict loop: accessible count did not increase (" +
                    std::to_string(a_hist_.back()) + " -> " + std::to_string(d.a) + ")",
                state_dump(g_, p_, d, "resolver iter " + std::to_string(iter)));
        a_hist_.push_back(d.a);
        if (iter > p_.r)
            throw TheoremViolation("conflict loop: exceeded r iterations",
                                   state_dump(g_, p_, d, "resolver"));
        if (opts_.paranoid) p_.validate(g_);

        if (place_vertex(g_, p_, d, x_)) {
            moves_.push_back("place");
            if (stats_) ++stats_->place_moves;
            trace_step(iter, d.a, "place");
            if (opts_.paranoid) p_.validate(g_);
            return;
        }

        // placement is forced once a clears these bounds, so failing them
        // here means the run left the guaranteed region
        if (d.a > params_.floor_2m1)
            throw TheoremViolation("placement failed although a > floor(2*m1)",
                                   state_dump(g_, p_, d, "resolver x=" +
                                                             std::to_string(x_)));
        if (d.a > params_.floor_a0)
            throw TheoremViolation("a exceeds floor(a0) before augmentation",
                                   state_dump(g_, p_, d, "resolver"));

        auto cover = strong_component_cover(d, params_.floor_a0);
        int t = choose_terminal(d);
        SoloProfile sp = solo_profile(g_, p_, d);

        std::string mv;
        if (augment_friendly(g_, p_, d, sp, cover)) {
            mv = "friendly";
            if (stats_) ++stats_->friendly_moves;
        } else if (augment_claim2(g_, p_, d, sp, t)) {
            mv = "claim2";
            if (stats_) ++stats_->claim2_moves;
        } else {
            augment_final(g_, p_, d, sp, cover, t, params_, p_.r, opts_.paranoid);
            mv = "final";
            if (stats_) ++stats_->final_moves;
        }
        moves_.push_back(mv);
        trace_step(iter, d.a, mv);
        if (opts_.paranoid) p_.validate(g_);
    }
}

namespace {

std::vector<int> solve_rec(const Graph& g, int r, const SparsityParams& params,
                           const SolveOptions& opts, SolveStats* stats);

std::vector<int> edge_induction(const Graph& g0, int r, const SparsityParams& params,
                                const SolveOptions& opts, SolveStats* stats) {
    int n = g0.vertex_count();
    Graph work = g0;
    std::vector<std::pair<int, int>> removed;
    removed.reserve(work.edge_count());
    while (work.edge_count() > 0) {
        int x = -1, dmin = INT_MAX;
        for (int v = 0; v < n; ++v) {
            int dv = work.degree(v);
            if (dv > 0 && dv < dmin) {
                dmin = dv;
                x = v;
            }
        }
        if (dmin > params.floor_2m1)
            throw PreconditionViolation(
                "graph outside the declared class: minimum degree " +
                std::to_string(dmin) + " exceeds floor(2*m1) = " +
                std::to_string(params.floor_2m1));
        int y = *work.neighbors(x).begin();
        work.remove_edge(x, y);
        removed.push_back({x, y});
    }

    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = v % r;

    for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
        auto [x, y] = *it;
        work.add_edge(x, y);
        if (cls[x] != cls[y]) continue;
        if (stats) ++stats->conflicts;
        if (opts.trace)
            *opts.trace << "{\"event\":\"conflict\",\"edge\":[" << x << "," << y
                        << "]}\n";
        cls[x] = -1;
        auto p = EquitablePartition::from_classes(n, r, cls);
        ConflictResolver res(work, p, x, params, opts, stats);
        res.run();
        if (stats) stats->a_histories.push_back(res.a_history());
        cls = p.class_of;
    }
    return cls;
}

std::vector<int> solve_rec(const Graph& g, int r, const SparsityParams& params,
                           const SolveOptions& opts, SolveStats* stats) {
    int n = g.vertex_count();
    if (g.edge_count() == 0) {
        if (stats && stats->divisibility_branch < 0) stats->divisibility_branch = 0;
        std::vector<int> cls(n);
        for (int v = 0; v < n; ++v) cls[v] = v % r;
        return cls;
    }
    if (n <= r) {
        if (stats && stats->divisibility_branch < 0) stats->divisibility_branch = 0;
        std::vector<int> cls(n);
        for (int v = 0; v < n; ++v) cls[v] = v;
        return cls;
    }
    int t = (r - n % r) % r;
    if (t == 0) {
        if (stats && stats->divisibility_branch < 0) stats->divisibility_branch = 1;
        return edge_induction(g, r, params, opts, stats);
    }
    if (t <= params.floor_2m1) {
        // pad with a t-clique to reach divisibility, color, then forget it
        if (stats && stats->divisibility_branch < 0) stats->divisibility_branch = 2;
        Graph h = g;
        std::vector<int> extra;
        for (int i = 0; i < t; ++i) extra.push_back(h.add_vertex());
        for (size_t a = 0; a < extra.size(); ++a)
            for (size_t b = a + 1; b < extra.size(); ++b)
                h.add_edge(extra[a], extra[b]);
        auto cls = edge_induction(h, r, params, opts, stats);
        cls.resize(n);
        return cls;
    }
    // peel r-t low-degree vertices, color the rest, extend greedily with
    // distinct colors
    if (stats && stats->divisibility_branch < 0) stats->divisibility_branch = 3;
    auto dg = degeneracy_order(g);
    if (dg.degeneracy > params.floor_2m1)
        throw PreconditionViolation(
            "graph outside the declared class: degeneracy " +
            std::to_string(dg.degeneracy) + " exceeds floor(2*m1) = " +
            std::to_string(params.floor_2m1));
    int keep = n - (r - t);
    std::vector<int> head(dg.order.begin(), dg.order.begin() + keep);
    Graph h = g.induced(head);
    auto sub = solve_rec(h, r, params, opts, stats);
    std::vector<int> cls(n, -1);
    for (int i = 0; i < keep; ++i) cls[head[i]] = sub[i];
    std::vector<char> used_class(r, 0);
    for (int i = keep; i < n; ++i) {
        int v = dg.order[i];
        std::vector<char> used = used_class;
        for (int wnb : g.neighbors(v))
            if (cls[wnb] >= 0) used[cls[wnb]] = 1;
        int pick = -1;
        for (int c = 0; c < r && pick < 0; ++c)
            if (!used[c]) pick = c;
        if (pick < 0)
            throw TheoremViolation("extension ran out of colors at vertex " +
                                       std::to_string(v),
                                   "peel extension");
        cls[v] = pick;
        used_class[pick] = 1;
    }
    return cls;
}

}  // namespace

std::vector<int> equitable_color(const Graph& g, int r, const SparsityParams& params,
                                 const SolveOptions& opts, SolveStats* stats) {
    auto start = std::chrono::steady_clock::now();
    if (stats) *stats = SolveStats{};
    if (r < 1) throw PreconditionViolation("equitable_color: r must be at least 1");
    int n = g.vertex_count();
    bool trivial = g.edge_count() == 0 || n <= r;
    if (!trivial) {
        int delta = g.max_degree();
        if (delta > r)
            throw PreconditionViolation("equitable_color: max degree " +
                                        std::to_string(delta) + " exceeds r = " +
                                        std::to_string(r));
        if (r < params.min_r)
            throw PreconditionViolation(
                "equitable_color: r = " + std::to_string(r) +
                " is below the guarantee threshold ceil(r0) = " +
                std::to_string(params.min_r));
    }
    auto cls = solve_rec(g, r, params, opts, stats);
    for (auto& c : cls) ++c;
    if (stats)
        stats->elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
    return cls;
}

}  // namespace eqcolor
