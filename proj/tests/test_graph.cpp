#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bei/graph.hpp"
#include "bei/graph_io.hpp"
#include "bei/verify.hpp"
#include "test_support.hpp"

using namespace bei;

TEST_CASE("vertex sets") {
    VertexSet s{0, 2, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.min() == 0);
    CHECK(s.members() == std::vector<int>{0, 2, 5});
    CHECK(s.to_string() == "{1,3,6}");
    CHECK(VertexSet{}.to_string() == "{}");
    CHECK(s.without(0).with(1) == VertexSet{1, 2, 5});
    CHECK(VertexSet{2}.is_subset_of(s));
    CHECK(VertexSet::all(4) == VertexSet{0, 1, 2, 3});
    CHECK(lexicographic_less(VertexSet{0, 3}, VertexSet{1, 2}));
    CHECK(size_then_mask_less(VertexSet{3}, VertexSet{0, 1}));
}

TEST_CASE("graph invariants hold by construction") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(2, 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kHardVertexLimit + 1), std::invalid_argument);
    CHECK(Graph{kHardVertexLimit}.order() == kHardVertexLimit);
}

TEST_CASE("families") {
    CHECK(families::complete(5).edge_count() == 10);
    CHECK(families::path(5).edge_count() == 4);
    CHECK(families::cycle(6).edge_count() == 6);
    CHECK(families::complete_bipartite(2, 3).edge_count() == 6);
    CHECK(families::star(3).degree(0) == 3);
    CHECK(families::wheel(6).degree(0) == 5);
    CHECK(families::wheel(6).edge_count() == 10);
}

TEST_CASE("induced subgraphs and disjoint unions") {
    const Graph c5 = families::cycle(5);
    const Graph h = induced_subgraph(c5, VertexSet{0, 1, 2});
    CHECK(h == families::path(3));

    const Graph two_k2 = disjoint_union(families::complete(2), families::complete(2));
    CHECK(two_k2.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("symmetry and irreflexivity on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = test::random_graph(1 + trial % 20, 0.4, rng);
        for (int u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("labelled graph enumeration counts") {
    int total = 0;
    int connected = 0;
    for_each_labeled_graph(4, [&](const Graph& g) {
        ++total;
        connected += is_connected(g);
    });
    CHECK(total == 64);
    CHECK(connected == 38);
}
