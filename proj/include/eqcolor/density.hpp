#pragma once

#include <vector>

#include "eqcolor/graph.hpp"
#include "eqcolor/rational.hpp"

namespace eqcolor {

struct DensestSubgraph {
    Rational density;           // max over nonempty S of e(S)/|S|; 0/1 if n == 0
    std::vector<int> vertices;  // a subgraph attaining it
};

// Exact maximum subgraph density via max-flow.  Binary search on dyadic
// guesses narrows the gap below 1/(n(n-1)), after which the best feasible
// set is exact.  Polynomial; fine for a few thousand vertices.
DensestSubgraph densest_subgraph(const Graph& g);
Rational max_subgraph_density(const Graph& g);

// Brute force over all vertex subsets.  Independent of the flow routine;
// exists to cross-check it.  Throws InstanceTooLarge above the cap.
Rational max_subgraph_density_exhaustive(const Graph& g, int cap = 20);

struct BipartiteDensity {
    Rational density;  // max over bipartite subgraphs H of e(H)/|H|
    std::vector<int> side_a, side_b;
};

// Exact maximum bipartite subgraph density.  Tries every assignment of
// vertices to side A / side B / outside with a bound-based cutoff, so
// worst case 3^n.  Throws InstanceTooLarge above the cap.
BipartiteDensity max_bipartite_subgraph_density(const Graph& g, int cap = 20);

struct MembershipReport {
    bool member = false;
    Rational density;                  // max subgraph density found
    bool bipartite_checked = false;    // false when n exceeded the cap
    Rational bipartite_density;        // valid when bipartite_checked
    std::vector<int> violating_set;    // witness when member == false
    std::string detail;
};

// Checks e(H) <= m1*|H| for all subgraphs and e(H) <= m2*|H| for all
// bipartite subgraphs.  Thresholds are rationalized from their decimal
// form so the comparisons are exact.  The bipartite side is exponential
// and is skipped (reported in detail) when n > bipartite_cap.
MembershipReport check_membership(const Graph& g, double m1, double m2,
                                  int bipartite_cap = 20);

}  // namespace eqcolor
