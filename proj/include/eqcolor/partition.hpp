#pragma once

#include <string>
#include <vector>

#include "eqcolor/graph.hpp"

namespace eqcolor {

// Color classes of an (almost) equitable coloring.  In conflict mode one
// vertex is unassigned and exactly one class, the small one, has s-1
// vertices; otherwise every class has exactly s.
struct EquitablePartition {
    int r = 0;
    int s = 0;          // large class size
    int small = -1;     // index of the class of size s-1, or -1 if none
    std::vector<std::vector<int>> classes;  // sorted vertex ids
    std::vector<int> class_of;              // per vertex, -1 = unassigned

    static EquitablePartition from_classes(int n, int r,
                                           const std::vector<int>& class_of);

    int size_of(int i) const { return static_cast<int>(classes.at(i).size()); }

    void assign(int v, int to);
    void unassign(int v);
    void move_vertex(int v, int to);

    // relocate the small marker after moves changed class sizes; throws
    // PreconditionViolation if sizes no longer form an equitable shape
    void refresh_small();

    // independence of every class against h, plus the size shape
    void validate(const Graph& h) const;

    std::string dump() const;
};

// Digraph on color classes: arc i->j when some vertex of class i has no
// neighbor in class j.  Also carries per-vertex class neighbor counts,
// accessibility, and BFS distance to the small class.
struct ClassDigraph {
    int r = 0;
    int small = -1;
    int a = 0;                              // number of accessible classes
    std::vector<std::vector<int>> cnt;      // [v][i]: neighbors of v in class i
    std::vector<std::vector<char>> arc;     // [i][j]
    std::vector<char> accessible;           // per class
    std::vector<int> dist;                  // arcs to reach small; -1 unreachable

    bool has_arc(int i, int j) const { return arc[i][j] != 0; }
    std::vector<int> witnesses(int i, int j, const EquitablePartition& p) const;

    std::string dump(const EquitablePartition& p) const;
};

ClassDigraph build_class_digraph(const Graph& h, const EquitablePartition& p);

// Shortest directed class path from `from` to `to`, expanding targets in
// ascending index order.  Restricted to classes with allowed[c] != 0 when
// allowed is given.  Empty result = unreachable; path includes endpoints.
std::vector<int> shortest_class_path(const ClassDigraph& d, int from, int to,
                                     const std::vector<char>* allowed = nullptr);

// The accessible class whose shortest path to the small class is longest
// (lowest index on ties); the small class itself when it alone is
// accessible.  Removing this class keeps every other accessible class
// accessible.
int choose_terminal(const ClassDigraph& d);

// Direct check of the terminal property, for tests.
bool is_terminal(const ClassDigraph& d, int t);

// Largest strong component of the subdigraph induced by inaccessible
// classes, as a sorted list.  Throws NoBigComponent if it has fewer than
// r - floor_a0 classes.
std::vector<int> strong_component_cover(const ClassDigraph& d, int floor_a0);

// Move picks[i] from path[i] to path[i+1], executing the last arc first
// so every intermediate state is a valid partition.  Each pick is
// revalidated against the live classes; throws StaleWitness otherwise.
void switch_witnesses(const Graph& h, EquitablePartition& p,
                      const std::vector<int>& path, const std::vector<int>& picks);

// Solo structure: for u in an accessible class V_i, solo[u] holds the
// vertices v of inaccessible classes with uv an edge and v having u as
// its only V_i neighbor; nice[u] keeps those with a nonadjacent partner
// in solo[u].
struct SoloProfile {
    std::vector<std::vector<int>> solo;
    std::vector<std::vector<int>> nice;
};

SoloProfile solo_profile(const Graph& h, const EquitablePartition& p,
                         const ClassDigraph& d);

// Weight of u against the inaccessible side: neighbors in cover classes
// count 2/e, the rest 1/e, where e is the neighbor's edge count into u's
// class.  Summing over a full class of size s gives exactly (b+c)*s.
double vertex_weight(const Graph& h, const EquitablePartition& p,
                     const ClassDigraph& d, const std::vector<char>& in_cover, int u);

}  // namespace eqcolor
