#include "eqcolor/partition.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "eqcolor/errors.hpp"

namespace eqcolor {

EquitablePartition EquitablePartition::from_classes(int n, int r,
                                                    const std::vector<int>& class_of) {
    if (static_cast<int>(class_of.size()) != n)
        throw PreconditionViolation("partition: class_of size mismatch");
    if (r <= 0) throw PreconditionViolation("partition: r must be positive");
    EquitablePartition p;
    p.r = r;
    p.class_of = class_of;
    p.classes.assign(r, {});
    for (int v = 0; v < n; ++v) {
        int c = class_of[v];
        if (c == -1) continue;
        if (c < 0 || c >= r) throw PreconditionViolation("partition: class out of range");
        p.classes[c].push_back(v);
    }
    int lo = n, hi = 0;
    for (const auto& cl : p.classes) {
        lo = std::min(lo, static_cast<int>(cl.size()));
        hi = std::max(hi, static_cast<int>(cl.size()));
    }
    p.s = hi;
    p.small = -1;
    if (lo != hi) {
        if (hi - lo != 1)
            throw PreconditionViolation("partition: class sizes spread more than one");
        int small_count = 0;
        for (int i = 0; i < r; ++i)
            if (p.size_of(i) == lo) {
                p.small = i;
                ++small_count;
            }
        if (small_count != 1)
            throw PreconditionViolation("partition: expected exactly one small class, found " +
                                        std::to_string(small_count));
    }
    return p;
}

void EquitablePartition::assign(int v, int to) {
    if (class_of.at(v) != -1)
        throw PreconditionViolation("partition: vertex already assigned");
    class_of[v] = to;
    auto& cl = classes.at(to);
    cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
}

void EquitablePartition::unassign(int v) {
    int c = class_of.at(v);
    if (c == -1) throw PreconditionViolation("partition: vertex not assigned");
    auto& cl = classes[c];
    cl.erase(std::find(cl.begin(), cl.end(), v));
    class_of[v] = -1;
}

void EquitablePartition::move_vertex(int v, int to) {
    unassign(v);
    assign(v, to);
}

void EquitablePartition::refresh_small() {
    int lo = size_of(0);
    int hi = lo;
    for (const auto& cl : classes) {
        lo = std::min(lo, static_cast<int>(cl.size()));
        hi = std::max(hi, static_cast<int>(cl.size()));
    }
    if (lo == hi) {
        small = -1;
        s = hi;
        return;
    }
    if (hi - lo != 1)
        throw PreconditionViolation("partition: class sizes spread more than one");
    s = hi;
    int found = -1, count = 0;
    for (int i = 0; i < r; ++i)
        if (size_of(i) == lo) {
            found = i;
            ++count;
        }
    if (count != 1)
        throw PreconditionViolation("partition: expected exactly one small class, found " +
                                    std::to_string(count));
    small = found;
}

void EquitablePartition::validate(const Graph& h) const {
    for (int i = 0; i < r; ++i) {
        const auto& cl = classes[i];
        for (size_t x = 0; x < cl.size(); ++x)
            for (size_t y = x + 1; y < cl.size(); ++y)
                if (h.has_edge(cl[x], cl[y]))
                    throw PreconditionViolation(
                        "partition: class " + std::to_string(i) + " contains edge " +
                        std::to_string(cl[x]) + "-" + std::to_string(cl[y]));
        for (int v : cl)
            if (class_of.at(v) != i)
                throw PreconditionViolation("partition: class_of out of sync");
    }
    for (int i = 0; i < r; ++i) {
        int sz = size_of(i);
        if (sz != s && !(i == small && sz == s - 1))
            throw PreconditionViolation("partition: class " + std::to_string(i) +
                                        " has size " + std::to_string(sz));
    }
}

std::string EquitablePartition::dump() const {
    std::ostringstream os;
    os << "r=" << r << " s=" << s << " small=" << small << " classes=[";
    for (int i = 0; i < r; ++i) {
        if (i) os << " ";
        os << i << ":{";
        for (size_t k = 0; k < classes[i].size(); ++k) {
            if (k) os << ",";
            os << classes[i][k];
        }
        os << "}";
    }
    os << "]";
    return os.str();
}

std::vector<int> ClassDigraph::witnesses(int i, int j,
                                         const EquitablePartition& p) const {
    std::vector<int> out;
    for (int v : p.classes.at(i))
        if (cnt[v][j] == 0) out.push_back(v);
    return out;
}

std::string ClassDigraph::dump(const EquitablePartition& p) const {
    std::ostringstream os;
    os << "a=" << a << " small=" << small << " accessible={";
    bool first = true;
    for (int i = 0; i < r; ++i)
        if (accessible[i]) {
            if (!first) os << ",";
            os << i;
            first = false;
        }
    os << "} arcs=[";
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (arc[i][j])
                os << " " << i << "->" << j << "(" << witnesses(i, j, p).size() << ")";
    os << " ]";
    return os.str();
}

ClassDigraph build_class_digraph(const Graph& h, const EquitablePartition& p) {
    int n = h.vertex_count();
    ClassDigraph d;
    d.r = p.r;
    d.small = p.small;
    d.cnt.assign(n, std::vector<int>(p.r, 0));
    for (int v = 0; v < n; ++v)
        for (int w : h.neighbors(v)) {
            int c = p.class_of[w];
            if (c != -1) ++d.cnt[v][c];
        }
    d.arc.assign(p.r, std::vector<char>(p.r, 0));
    for (int i = 0; i < p.r; ++i)
        for (int v : p.classes[i])
            for (int j = 0; j < p.r; ++j)
                if (j != i && d.cnt[v][j] == 0) d.arc[i][j] = 1;
    d.accessible.assign(p.r, 0);
    d.dist.assign(p.r, -1);
    if (p.small < 0)
        throw PreconditionViolation("class digraph: no small class");
    // reverse BFS from the small class
    std::deque<int> queue{p.small};
    d.dist[p.small] = 0;
    d.accessible[p.small] = 1;
    while (!queue.empty()) {
        int j = queue.front();
        queue.pop_front();
        for (int i = 0; i < p.r; ++i)
            if (d.arc[i][j] && d.dist[i] < 0) {
                d.dist[i] = d.dist[j] + 1;
                d.accessible[i] = 1;
                queue.push_back(i);
            }
    }
    for (int i = 0; i < p.r; ++i) d.a += d.accessible[i] ? 1 : 0;
    return d;
}

std::vector<int> shortest_class_path(const ClassDigraph& d, int from, int to,
                                     const std::vector<char>* allowed) {
    if (allowed && (!(*allowed)[from] || !(*allowed)[to])) return {};
    std::vector<int> parent(d.r, -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty() && parent[to] == -2) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < d.r; ++j) {
            if (parent[j] != -2 || !d.arc[i][j]) continue;
            if (allowed && !(*allowed)[j]) continue;
            parent[j] = i;
            queue.push_back(j);
        }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int c = to; c != -1; c = parent[c]) path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
}

int choose_terminal(const ClassDigraph& d) {
    if (d.a == 1) return d.small;
    int best = -1, best_dist = -1;
    for (int i = 0; i < d.r; ++i) {
        if (!d.accessible[i] || i == d.small) continue;
        if (d.dist[i] > best_dist) {
            best = i;
            best_dist = d.dist[i];
        }
    }
    return best;
}

bool is_terminal(const ClassDigraph& d, int t) {
    if (!d.accessible[t]) return false;
    if (t == d.small) return d.a == 1;
    // every other accessible class must keep a path to small avoiding t
    std::vector<char> allowed(d.r, 1);
    allowed[t] = 0;
    for (int k = 0; k < d.r; ++k) {
        if (!d.accessible[k] || k == t || k == d.small) continue;
        if (shortest_class_path(d, k, d.small, &allowed).empty()) return false;
    }
    return true;
}

std::vector<int> strong_component_cover(const ClassDigraph& d, int floor_a0) {
    // Tarjan on the subdigraph induced by inaccessible classes.
    std::vector<int> index(d.r, -1), low(d.r, 0), comp(d.r, -1);
    std::vector<int> stack;
    std::vector<char> on_stack(d.r, 0);
    int next_index = 0, next_comp = 0;
    std::vector<std::vector<int>> members;

    struct Frame {
        int v;
        int j;
    };
    for (int root = 0; root < d.r; ++root) {
        if (d.accessible[root] || index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            if (fr.j < d.r) {
                int j = fr.j++;
                if (j == fr.v || d.accessible[j] || !d.arc[fr.v][j]) continue;
                if (index[j] == -1) {
                    index[j] = low[j] = next_index++;
                    stack.push_back(j);
                    on_stack[j] = 1;
                    call.push_back({j, 0});
                } else if (on_stack[j]) {
                    low[fr.v] = std::min(low[fr.v], index[j]);
                }
            } else {
                int v = fr.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    members.emplace_back();
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = next_comp;
                        members.back().push_back(w);
                    } while (w != v);
                    ++next_comp;
                }
            }
        }
    }
    int need = d.r - floor_a0;
    std::vector<int> best;
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        if (static_cast<int>(m.size()) > static_cast<int>(best.size()) ||
            (m.size() == best.size() && !best.empty() && m < best))
            best = m;
    }
    if (static_cast<int>(best.size()) < need) {
        std::ostringstream os;
        os << "no strong component of size >= " << need << " among inaccessible classes;"
           << " component sizes:";
        for (const auto& m : members) os << " " << m.size();
        throw NoBigComponent(os.str());
    }
    return best;
}

void switch_witnesses(const Graph& h, EquitablePartition& p,
                      const std::vector<int>& path, const std::vector<int>& picks) {
    if (path.size() < 2) {
        if (!picks.empty()) throw PreconditionViolation("switch: picks without arcs");
        return;
    }
    if (picks.size() != path.size() - 1)
        throw PreconditionViolation("switch: need one pick per arc");
    // last arc first: the target of each earlier arc has already shed its
    // own witness, so validation sees the state the move lands in
    for (int k = static_cast<int>(picks.size()) - 1; k >= 0; --k) {
        int v = picks[k];
        int from = path[k], to = path[k + 1];
        if (p.class_of.at(v) != from)
            throw StaleWitness("switch: vertex " + std::to_string(v) + " not in class " +
                               std::to_string(from));
        for (int w : p.classes[to])
            if (h.has_edge(v, w))
                throw StaleWitness("switch: vertex " + std::to_string(v) +
                                   " has neighbor " + std::to_string(w) + " in class " +
                                   std::to_string(to));
        p.move_vertex(v, to);
    }
}

SoloProfile solo_profile(const Graph& h, const EquitablePartition& p,
                         const ClassDigraph& d) {
    SoloProfile sp;
    int n = h.vertex_count();
    sp.solo.assign(n, {});
    sp.nice.assign(n, {});
    for (int i = 0; i < p.r; ++i) {
        if (!d.accessible[i]) continue;
        for (int u : p.classes[i]) {
            for (int v : h.neighbors(u)) {
                int j = p.class_of[v];
                if (j == -1 || d.accessible[j]) continue;
                if (d.cnt[v][i] == 1) sp.solo[u].push_back(v);
            }
            const auto& q = sp.solo[u];
            for (int v : q) {
                for (int w : q)
                    if (w != v && !h.has_edge(v, w)) {
                        sp.nice[u].push_back(v);
                        break;
                    }
            }
        }
    }
    return sp;
}

double vertex_weight(const Graph& h, const EquitablePartition& p,
                     const ClassDigraph& d, const std::vector<char>& in_cover, int u) {
    int i = p.class_of.at(u);
    double total = 0;
    for (int v : h.neighbors(u)) {
        int j = p.class_of[v];
        if (j == -1 || d.accessible[j]) continue;
        double num = in_cover[j] ? 2.0 : 1.0;
        total += num / static_cast<double>(d.cnt[v][i]);
    }
    return total;
}

}  // namespace eqcolor
