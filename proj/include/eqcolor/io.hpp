#pragma once

#include <iosfwd>
#include <string>

#include "eqcolor/graph.hpp"

namespace eqcolor {

// Plain edge list: one "u v" pair per line, 0-based ids, '#' starts a
// comment.  A comment of the form "# n=K" fixes the vertex count, which
// is how graphs with trailing isolated vertices round-trip.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS: "p edge N M" header, "e u v" lines with 1-based ids, "c" comments.
Graph read_dimacs(std::istream& in);

// Sniffs the format: a "p edge"/"p col" header means DIMACS, anything
// else is treated as an edge list.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);  // "-" reads stdin

}  // namespace eqcolor
