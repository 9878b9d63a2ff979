#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqcolor/errors.hpp"
#include "eqcolor/generators.hpp"
#include "eqcolor/graph.hpp"
#include "eqcolor/params.hpp"
#include "eqcolor/solver.hpp"
#include "eqcolor/verify.hpp"

using namespace eqcolor;

TEST_CASE("verifier accepts a proper balanced coloring") {
    Graph g = gen_named("cycle", 6);
    auto rep = verify_coloring(g, {1, 2, 1, 2, 1, 2}, 2);
    CHECK(rep.ok());
    CHECK(rep.proper);
    CHECK(rep.equitable);
    CHECK(rep.conflict_edges.empty());
    CHECK(rep.class_sizes == std::vector<int>{3, 3});
}

TEST_CASE("verifier flags monochromatic edges") {
    Graph g = gen_named("path", 4);
    auto rep = verify_coloring(g, {1, 1, 2, 2}, 2);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.proper);
    CHECK(rep.equitable);
    REQUIRE(rep.conflict_edges.size() == 2);
    CHECK(rep.conflict_edges[0] == std::pair<int, int>{0, 1});
    CHECK(rep.conflict_edges[1] == std::pair<int, int>{2, 3});
}

TEST_CASE("verifier flags unbalanced classes") {
    Graph g(5);
    auto rep = verify_coloring(g, {1, 1, 1, 2, 3}, 3);
    CHECK_FALSE(rep.ok());
    CHECK(rep.proper);
    CHECK_FALSE(rep.equitable);
    CHECK(rep.class_sizes == std::vector<int>{3, 1, 1});
    CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("verifier counts unused colors as empty classes") {
    Graph g(2);
    // colors 1 and 3 used, class 2 stays empty: spread is 1 and passes
    auto rep = verify_coloring(g, {1, 3}, 3);
    CHECK(rep.equitable);
    CHECK(rep.class_sizes == std::vector<int>{1, 0, 1});

    auto rep2 = verify_coloring(Graph(4), {1, 1, 3, 3}, 3);
    CHECK_FALSE(rep2.equitable);
}

TEST_CASE("verifier rejects malformed input") {
    Graph g(3);
    CHECK_THROWS_AS(verify_coloring(g, {1, 2}, 2), PreconditionViolation);
    CHECK_THROWS_AS(verify_coloring(g, {1, 2, 0}, 2), PreconditionViolation);
    CHECK_THROWS_AS(verify_coloring(g, {1, 2, 3}, 2), PreconditionViolation);
}

TEST_CASE("oracle certifies feasible instances with a witness") {
    Graph c5 = gen_named("cycle", 5);
    auto w = oracle_equitable(c5, 3);
    REQUIRE(w.has_value());
    auto rep = verify_coloring(c5, *w, 3);
    CHECK(rep.ok());
    std::multiset<int> sizes(rep.class_sizes.begin(), rep.class_sizes.end());
    CHECK(sizes == std::multiset<int>{1, 2, 2});
}

TEST_CASE("oracle refutes infeasible instances") {
    // equitable 3-coloring of K33 would need independent pairs from a
    // 3-vertex side, which cannot tile it
    Graph k33 = gen_named("complete_bipartite", 3, 3);
    CHECK_FALSE(oracle_equitable(k33, 3).has_value());
    CHECK(oracle_equitable(k33, 2).has_value());

    Graph c5 = gen_named("cycle", 5);
    CHECK_FALSE(oracle_equitable(c5, 2).has_value());

    Graph k4 = gen_named("complete", 4);
    CHECK_FALSE(oracle_equitable(k4, 3).has_value());
    CHECK(oracle_equitable(k4, 4).has_value());
}

TEST_CASE("oracle size cap") {
    Graph big(17);
    CHECK_THROWS_AS(oracle_equitable(big, 2), InstanceTooLarge);
    auto w = oracle_equitable(big, 2, 17);
    REQUIRE(w.has_value());
    CHECK(verify_coloring(big, *w, 2).ok());
}

TEST_CASE("oracle agrees with the solver on small forests") {
    auto params = build_params(1.0, 1.0);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int n = 8 + static_cast<int>(seed % 9);
        Graph g = gen_d_degenerate(n, 1, seed);
        int r = std::max(7, g.max_degree());
        auto colors = equitable_color(g, r, params);
        CAPTURE(seed);
        CHECK(verify_coloring(g, colors, r).ok());
        auto w = oracle_equitable(g, r);
        REQUIRE(w.has_value());
        CHECK(verify_coloring(g, *w, r).ok());
    }
}

TEST_CASE("generators are seed deterministic") {
    Graph a = gen_d_degenerate(40, 2, 123);
    Graph b = gen_d_degenerate(40, 2, 123);
    CHECK(a.edges() == b.edges());
    Graph c = gen_d_degenerate(40, 2, 124);
    CHECK(a.edges() != c.edges());

    Graph p = gen_gnp(30, 0.4, 9);
    Graph q = gen_gnp(30, 0.4, 9);
    CHECK(p.edges() == q.edges());
}

TEST_CASE("gnp edge counts at the extremes") {
    CHECK(gen_gnp(20, 0.0, 1).edge_count() == 0);
    CHECK(gen_gnp(20, 1.0, 1).edge_count() == 190);
    int m = gen_gnp(30, 0.5, 7).edge_count();
    CHECK(m > 150);
    CHECK(m < 285);
}

TEST_CASE("d-degenerate generator respects its budget") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = gen_d_degenerate(50, 2, seed);
        CHECK(g.edge_count() == 97);  // 1 + 2*(50-2)
        CHECK(degeneracy_order(g).degeneracy <= 2);
        Graph t = gen_d_degenerate(50, 1, seed);
        CHECK(t.edge_count() == 49);
        CHECK(degeneracy_order(t).degeneracy <= 1);
    }
}

TEST_CASE("named families have the right shape") {
    Graph k4 = gen_named("complete", 4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph k33 = gen_named("complete_bipartite", 3, 3);
    CHECK(k33.vertex_count() == 6);
    CHECK(k33.edge_count() == 9);
    CHECK_FALSE(k33.has_edge(0, 1));
    CHECK(k33.has_edge(0, 3));

    Graph c5 = gen_named("cycle", 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    Graph p4 = gen_named("path", 4);
    CHECK(p4.edge_count() == 3);

    Graph star = gen_named("star", 5);
    CHECK(star.vertex_count() == 6);
    CHECK(star.edge_count() == 5);
    CHECK(star.degree(0) == 5);

    CHECK(gen_named("empty", 7).edge_count() == 0);
    CHECK_THROWS_AS(gen_named("torus", 3), Error);
}
