#include "eqcolor/graph.hpp"

#include <algorithm>

#include "eqcolor/errors.hpp"

namespace eqcolor {

void Graph::add_edge(int u, int v) {
    if (u == v) throw PreconditionViolation("graph: self loop");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw PreconditionViolation("graph: vertex out of range");
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++m_;
    }
}

void Graph::remove_edge(int u, int v) {
    if (adj_.at(u).erase(v)) {
        adj_.at(v).erase(u);
        --m_;
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    return adj_[u].count(v) > 0;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& s : adj_) d = std::max(d, static_cast<int>(s.size()));
    return d;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(static_cast<int>(verts.size()));
    std::vector<int> pos(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) pos[verts[i]] = i;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int w : adj_[verts[i]])
            if (pos[w] > i) h.add_edge(i, pos[w]);
    return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyResult res;
    res.back_degrees.assign(n, 0);
    std::vector<int> deg(n);
    std::set<std::pair<int, int>> live;  // (degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        live.insert({deg[v], v});
    }
    std::vector<int> removal;
    removal.reserve(n);
    std::vector<char> gone(n, 0);
    while (!live.empty()) {
        auto [d, v] = *live.begin();
        live.erase(live.begin());
        gone[v] = 1;
        removal.push_back(v);
        res.back_degrees[v] = d;  // neighbors still live at removal time
        res.degeneracy = std::max(res.degeneracy, d);
        for (int w : g.neighbors(v)) {
            if (gone[w]) continue;
            live.erase({deg[w], w});
            --deg[w];
            live.insert({deg[w], w});
        }
    }
    res.order.assign(removal.rbegin(), removal.rend());
    return res;
}

}  // namespace eqcolor
