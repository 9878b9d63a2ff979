#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eqcolor/density.hpp"
#include "eqcolor/errors.hpp"
#include "eqcolor/generators.hpp"
#include "eqcolor/graph.hpp"
#include "eqcolor/rational.hpp"

using namespace eqcolor;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 5).str() == "7/5");
    CHECK(Rational(3, 1).str() == "3");
    CHECK(Rational(1, 2).value() == doctest::Approx(0.5));
}

TEST_CASE("rational_from_double recovers decimals") {
    CHECK(rational_from_double(1.5) == Rational(3, 2));
    CHECK(rational_from_double(0.5) == Rational(1, 2));
    CHECK(rational_from_double(5.205) == Rational(1041, 200));
    CHECK(rational_from_double(3.0) == Rational(3, 1));
    CHECK(rational_from_double(-0.25) == Rational(-1, 4));
}

TEST_CASE("densest subgraph on fixed graphs") {
    CHECK(max_subgraph_density(gen_named("complete", 4)) == Rational(3, 2));
    CHECK(max_subgraph_density(gen_named("complete_bipartite", 3, 3)) ==
          Rational(3, 2));
    CHECK(max_subgraph_density(gen_named("cycle", 5)) == Rational(1, 1));
    CHECK(max_subgraph_density(gen_named("path", 2)) == Rational(1, 2));
    CHECK(max_subgraph_density(gen_named("empty", 4)) == Rational(0, 1));
    CHECK(max_subgraph_density(petersen()) == Rational(3, 2));
}

TEST_CASE("densest subgraph witness attains the density") {
    Graph g = gen_named("complete", 5);
    for (int i = 0; i < 6; ++i) g.add_vertex();  // pendant fluff
    g.add_edge(0, 5);
    g.add_edge(5, 6);
    auto ds = densest_subgraph(g);
    CHECK(ds.density == Rational(2, 1));
    CHECK(ds.vertices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("flow matches exhaustive enumeration") {
    for (int seed = 0; seed < 30; ++seed) {
        int n = 4 + seed % 9;
        Graph g = gen_gnp(n, 0.15 + 0.07 * (seed % 10), 500 + seed);
        CAPTURE(seed);
        CHECK(max_subgraph_density(g) == max_subgraph_density_exhaustive(g));
    }
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = gen_d_degenerate(12, 2, seed);
        CHECK(max_subgraph_density(g) == max_subgraph_density_exhaustive(g));
    }
}

TEST_CASE("bipartite density on fixed graphs") {
    // K4 contains K_{2,2} once the two same-side edges are dropped
    CHECK(max_bipartite_subgraph_density(gen_named("complete", 4)).density ==
          Rational(1, 1));
    CHECK(max_bipartite_subgraph_density(gen_named("complete_bipartite", 3, 3))
              .density == Rational(3, 2));
    CHECK(max_bipartite_subgraph_density(gen_named("cycle", 5)).density ==
          Rational(4, 5));
    CHECK(max_bipartite_subgraph_density(gen_named("cycle", 4)).density ==
          Rational(1, 1));
    CHECK(max_bipartite_subgraph_density(gen_named("star", 5)).density ==
          Rational(5, 6));
    CHECK(max_bipartite_subgraph_density(gen_named("empty", 3)).density ==
          Rational(0, 1));
}

TEST_CASE("bipartite witness is consistent") {
    Graph g = petersen();
    auto bd = max_bipartite_subgraph_density(g, 10);
    long long cross = 0;
    for (int u : bd.side_a)
        for (int v : bd.side_b)
            if (g.has_edge(u, v)) ++cross;
    Rational attained(cross, static_cast<long long>(bd.side_a.size() +
                                                    bd.side_b.size()));
    CHECK(attained == bd.density);
}

TEST_CASE("size caps throw") {
    Graph g(21);
    CHECK_THROWS_AS(max_subgraph_density_exhaustive(g), InstanceTooLarge);
    CHECK_THROWS_AS(max_bipartite_subgraph_density(g), InstanceTooLarge);
    CHECK_NOTHROW(max_subgraph_density_exhaustive(g, 21));
}

TEST_CASE("membership check") {
    Graph forest = gen_d_degenerate(18, 1, 3);
    auto rep = check_membership(forest, 1.0, 1.0);
    CHECK(rep.member);
    CHECK(rep.bipartite_checked);

    auto hit = check_membership(gen_named("complete", 4), 1.0, 1.0);
    CHECK_FALSE(hit.member);
    CHECK(hit.violating_set == std::vector<int>{0, 1, 2, 3});

    // exact equality on both bounds is still membership
    auto edge_case = check_membership(gen_named("complete", 4), 1.5, 1.0);
    CHECK(edge_case.member);

    auto bip_hit = check_membership(gen_named("cycle", 4), 1.0, 0.9);
    CHECK_FALSE(bip_hit.member);
    CHECK(bip_hit.detail.find("bipartite") != std::string::npos);

    Graph big = gen_d_degenerate(25, 1, 4);
    auto skipped = check_membership(big, 1.0, 1.0, 10);
    CHECK(skipped.member);
    CHECK_FALSE(skipped.bipartite_checked);
    CHECK(skipped.detail.find("skipped") != std::string::npos);
}

TEST_CASE("generated graphs satisfy their density bound") {
    for (int seed = 0; seed < 5; ++seed) {
        Graph g = gen_d_degenerate(18, 2, 70 + seed);
        auto rep = check_membership(g, 2.0, 2.0);
        CHECK(rep.member);
    }
}
