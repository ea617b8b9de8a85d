#include <doctest.h>

#include <set>

#include "eqlines/graph.hpp"

using namespace eqlines;

TEST_CASE("basic structure and named constructions") {
    Graph k4 = Graph::complete(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(max_degree(k4) == 3);
    CHECK(k4.has_edge(0, 3));
    CHECK_FALSE(k4.has_edge(2, 2));

    Graph p5 = Graph::path(5);
    CHECK(p5.edge_count() == 4);
    CHECK(max_degree(p5) == 2);
    CHECK_FALSE(girth(p5).has_value());

    Graph c5 = Graph::cycle(5);
    CHECK(girth(c5) == 5);
    CHECK(cyclomatic_number(c5) == 1);

    Graph spider = Graph::spider({1, 1, 1, 2});
    CHECK(spider.vertex_count() == 6);
    CHECK(max_degree(spider) == 4);
    CHECK(cyclomatic_number(spider) == 0);

    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(2, {{0, 5}}));
}

TEST_CASE("connectivity and components") {
    Graph two = Graph::disjoint_union({Graph::complete(3), Graph::path(2)});
    CHECK_FALSE(is_connected(two));
    CHECK(connected_components(two).size() == 2);
    CHECK_THROWS(cyclomatic_number(two));
    CHECK(is_connected(Graph::cycle(4)));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("girth by breadth-first search") {
    CHECK(girth(Graph::complete(4)) == 3);
    CHECK(girth(Graph::cycle(7)) == 7);
    // Two cycles sharing a vertex: shortest wins.
    Graph g(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}});
    CHECK(girth(g) == 3);
}

TEST_CASE("pattern detectors find and miss correctly") {
    CHECK(find_subgraph(Graph::path(3), Pattern::P3).has_value());
    CHECK_FALSE(find_subgraph(Graph::complete(2), Pattern::P3).has_value());

    Graph t1112 = Graph::spider({1, 1, 1, 2});
    auto w = find_subgraph(t1112, Pattern::T1112);
    REQUIRE(w.has_value());
    CHECK(w->size() == 6);
    CHECK_FALSE(find_subgraph(Graph::path(6), Pattern::T1112).has_value());

    Graph t222 = Graph::spider({2, 2, 2});
    CHECK(find_subgraph(t222, Pattern::T222).has_value());
    CHECK_FALSE(find_subgraph(Graph::spider({1, 1, 2}), Pattern::T222).has_value());

    CHECK(find_subgraph(Graph::cycle(5), Pattern::CYCLE_LE_5).has_value());
    CHECK_FALSE(find_subgraph(Graph::cycle(6), Pattern::CYCLE_LE_5).has_value());
    CHECK_FALSE(find_subgraph(Graph::path(9), Pattern::CYCLE_LE_5).has_value());

    // Determinism: repeated calls return the same witness.
    CHECK(find_subgraph(Graph::complete(6), Pattern::CYCLE_LE_5) ==
          find_subgraph(Graph::complete(6), Pattern::CYCLE_LE_5));
}

TEST_CASE("neighborhoods and induced subgraphs") {
    Graph c6 = Graph::cycle(6);
    VertexSet s{0, 1};
    auto nb = closed_neighborhood(c6, s);
    CHECK(nb == VertexSet{0, 1, 2, 5});
    auto ext = extend_by_attached_vertex(c6, s);
    CHECK(ext == VertexSet{0, 1, 2});
    CHECK(complement_set(c6, nb) == VertexSet{3, 4});

    Graph sub = induced_subgraph(Graph::complete(5), {0, 2, 4});
    CHECK(sub == Graph::complete(3));
}

TEST_CASE("edge masks round-trip") {
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask)
            CHECK(Graph::from_edge_mask(n, mask).edge_mask() == mask);
    }
}

TEST_CASE("graph6 anchors") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph::complete(2)) == "A_");
    CHECK(graph6_decode("@").vertex_count() == 1);
    CHECK(graph6_decode("A_") == Graph::complete(2));
    CHECK_THROWS(graph6_decode(""));
    CHECK_THROWS(graph6_decode("A"));  // truncated edge bits
}

TEST_CASE("graph6 round-trips") {
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = Graph::from_edge_mask(n, mask);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    }
    // Larger sizes, including the multi-byte length prefix.
    Graph big = Graph::cycle(100);
    CHECK(graph6_decode(graph6_encode(big)) == big);
    Graph sparse(70, {{0, 69}, {1, 2}, {33, 34}});
    CHECK(graph6_decode(graph6_encode(sparse)) == sparse);
}
