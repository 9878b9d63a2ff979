#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqcolor/graph.hpp"

namespace eqcolor {

struct VerifyReport {
    bool proper = true;
    bool equitable = true;
    std::vector<std::pair<int, int>> conflict_edges;  // same-color edges
    std::vector<int> class_sizes;                     // indexed by color-1
    std::string detail;

    bool ok() const { return proper && equitable; }
};

// Checks colors (1..r, one per vertex) against g: every edge bicolored,
// class sizes within one of each other.  Malformed input (wrong length,
// color out of range) throws PreconditionViolation.
VerifyReport verify_coloring(const Graph& g, const std::vector<int>& colors, int r);

// Exhaustive equitable r-colorability test by backtracking with class
// capacity and symmetry pruning.  Returns a witness coloring (1..r) or
// nullopt if infeasible.  Throws InstanceTooLarge when n > cap.
std::optional<std::vector<int>> oracle_equitable(const Graph& g, int r, int cap = 16);

}  // namespace eqcolor
