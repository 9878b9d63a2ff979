#pragma once

#include <set>
#include <vector>

namespace eqcolor {

// Simple undirected graph on vertices 0..n-1.  No loops, no parallel
// edges.  Adjacency sets keep neighbor iteration ordered, which all the
// deterministic tie-breaking downstream relies on.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    int add_vertex() {
        adj_.emplace_back();
        return vertex_count() - 1;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::set<int>& neighbors(int v) const { return adj_.at(v); }
    int max_degree() const;

    // Subgraph induced on verts, relabeled 0..k-1 in the given order.
    Graph induced(const std::vector<int>& verts) const;

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::set<int>> adj_;
    int m_ = 0;
};

struct DegeneracyResult {
    std::vector<int> order;         // elimination order, last-removed first
    int degeneracy = 0;             // max back-degree over the order
    std::vector<int> back_degrees;  // per vertex: neighbors earlier in order
};

// Repeated minimum-degree removal, lowest id on ties.  order is the
// reverse of removal, so every vertex has at most `degeneracy` neighbors
// before it.
DegeneracyResult degeneracy_order(const Graph& g);

}  // namespace eqcolor
