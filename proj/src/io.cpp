#include "eqcolor/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "eqcolor/errors.hpp"

namespace eqcolor {

namespace {

Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
    for (auto [u, v] : edges) n = std::max(n, std::max(u, v) + 1);
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // honor an "n=K" hint inside the comment
            auto pos = line.find("n=", hash);
            if (pos != std::string::npos) {
                int k = 0;
                if (std::sscanf(line.c_str() + pos, "n=%d", &k) == 1)
                    n = std::max(n, k);
            }
            line.erase(hash);
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v))
            throw Error("edge list: line " + std::to_string(lineno) + ": expected two ids");
        if (u < 0 || v < 0)
            throw Error("edge list: line " + std::to_string(lineno) + ": negative id");
        if (u == v)
            throw Error("edge list: line " + std::to_string(lineno) + ": self loop");
        edges.emplace_back(u, v);
    }
    return build(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            ls >> fmt >> n >> m_declared;
            if (!ls || n < 0)
                throw Error("dimacs: line " + std::to_string(lineno) + ": bad problem line");
        } else if (tag == 'e') {
            int u, v;
            if (!(ls >> u >> v))
                throw Error("dimacs: line " + std::to_string(lineno) + ": bad edge line");
            if (u < 1 || v < 1 || u == v)
                throw Error("dimacs: line " + std::to_string(lineno) + ": bad endpoints");
            edges.emplace_back(u - 1, v - 1);
        }
        // other tags ignored
    }
    if (n < 0) throw Error("dimacs: missing problem line");
    return build(n, edges);
}

Graph read_graph(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // DIMACS if the first meaningful line is a problem line
    std::istringstream scan(text);
    std::string line;
    while (std::getline(scan, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == 'c') {
            // could still be either; DIMACS comments start with 'c'
            continue;
        }
        std::istringstream src(text);
        if (line[pos] == 'p') return read_dimacs(src);
        return read_edge_list(src);
    }
    std::istringstream src(text);
    return read_edge_list(src);
}

Graph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream f(path);
    if (!f) throw Error("cannot open " + path);
    return read_graph(f);
}

}  // namespace eqcolor
