#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "eqcolor/graph.hpp"
#include "eqcolor/params.hpp"
#include "eqcolor/partition.hpp"

namespace eqcolor {

struct SolveOptions {
    bool paranoid = false;     // revalidate state and proof bounds at every step
    std::ostream* trace = nullptr;  // JSON lines describing each conflict step
};

struct SolveStats {
    int divisibility_branch = -1;  // 0 trivial, 1 divisible, 2 clique pad, 3 peel+extend
    int conflicts = 0;
    int place_moves = 0;
    int friendly_moves = 0;
    int claim2_moves = 0;
    int final_moves = 0;
    std::vector<std::vector<int>> a_histories;  // accessible-count per conflict iteration
    double elapsed_seconds = 0;

    int max_a_iterations() const {
        size_t m = 0;
        for (const auto& h : a_histories) m = std::max(m, h.size());
        return static_cast<int>(m);
    }
};

// Equitable r-coloring of g.  Requires max degree <= r and r >= min_r
// from params unless the instance is trivial (no edges, or n <= r).
// Colors are 1..r.  Throws PreconditionViolation on unmet requirements
// and TheoremViolation if the procedure reaches a state its guarantees
// rule out.
std::vector<int> equitable_color(const Graph& g, int r, const SparsityParams& params,
                                 const SolveOptions& opts = {},
                                 SolveStats* stats = nullptr);

// --- conflict machinery, exposed for targeted tests ---

// Insert the uncolored vertex x into an accessible class free of its
// neighbors (never the small one) and rebalance along a class path.
// False if no such class exists.
bool place_vertex(const Graph& g, EquitablePartition& p, const ClassDigraph& d, int x);

// One augmenting move each; true means the move executed and the number
// of accessible classes grew.

// Absorb a cover-class solo neighbor v into the accessible side: its solo
// partner u vacates to another accessible class and the sizes rebalance.
bool augment_friendly(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                      const SoloProfile& sp, const std::vector<int>& cover);

// Swap u in the terminal class with a nice solo neighbor v whose class
// sees u exactly once; v's nonadjacent partner then opens a new arc.
bool augment_claim2(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                    const SoloProfile& sp, int terminal);

struct FinalMoveInfo {
    int u_star = -1;
    double weight = 0;
    int l1 = 0, l2 = 0;            // solo neighbors inside / outside the cover
    int n0 = 0, n1 = 0, n2plus = 0;  // inaccessible classes by u* neighbor count
    int v = -1, w = -1, k = -1;
    std::vector<int> path;
};

// The guaranteed move: max-weight vertex of the terminal class enters a
// neighbor-free cover class, witnesses shift along a cover path, and a
// nice solo neighbor backfills the terminal.  Throws TheoremViolation if
// any required ingredient is missing.
void augment_final(const Graph& h, EquitablePartition& p, const ClassDigraph& d,
                   const SoloProfile& sp, const std::vector<int>& cover, int terminal,
                   const SparsityParams& params, int r, bool paranoid,
                   FinalMoveInfo* info = nullptr);

// Runs the augment-until-placeable loop for one conflict.  p must have
// exactly one unassigned vertex x whose re-inserted edge ends in the
// small class.
class ConflictResolver {
public:
    ConflictResolver(const Graph& g, EquitablePartition& p, int x,
                     const SparsityParams& params, const SolveOptions& opts,
                     SolveStats* stats);
    void run();

    const std::vector<int>& a_history() const { return a_hist_; }
    const std::vector<std::string>& moves() const { return moves_; }

private:
    const Graph& g_;
    EquitablePartition& p_;
    int x_;
    const SparsityParams& params_;
    const SolveOptions& opts_;
    SolveStats* stats_;
    std::vector<int> a_hist_;
    std::vector<std::string> moves_;

    void trace_step(int iter, int a, const std::string& move);
};

}  // namespace eqcolor
