#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "heatcolor/evaluation.hpp"
#include "heatcolor/graph.hpp"
#include "test_util.hpp"

using namespace heatcolor;

TEST_CASE("graph normalizes and deduplicates edges") {
    // (2,0) reorders to (0,2); (1,0) duplicates (0,1).
    Graph g(3, {{0, 1}, {2, 0}, {1, 0}, {1, 2}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("adjacency is sorted and symmetric") {
    Graph g(4, {{2, 0}, {0, 1}, {3, 1}});
    CHECK(std::vector<int>(g.neighbors(0).begin(), g.neighbors(0).end()) ==
          std::vector<int>{1, 2});
    CHECK(std::vector<int>(g.neighbors(1).begin(), g.neighbors(1).end()) ==
          std::vector<int>{0, 3});
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 1);
    for (int v = 0; v < 4; ++v) {
        for (int u : g.neighbors(v)) {
            const auto back = g.neighbors(u);
            CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
    }
}

TEST_CASE("graph constructor rejects bad input") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}).neighbors(2), std::out_of_range);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}).degree(-1), std::out_of_range);
}

TEST_CASE("structural equality ignores the name") {
    Graph a(3, {{0, 1}}, "a");
    Graph b(3, {{1, 0}}, "b");
    Graph c(3, {{0, 2}});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("single-vertex graph is valid") {
    Graph g(1, {});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
    CHECK(g.neighbors(0).empty());
}

TEST_CASE("interval overlap is strict, touching endpoints share a resource") {
    std::vector<IntervalRequest> reqs{{"a", 0, 2}, {"b", 2, 4}, {"c", 1, 3}};
    Graph g = build_interval_graph(reqs);
    // a-b touch at t=2: no edge; c overlaps both.
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("interval builder rejects bad requests") {
    CHECK_THROWS_AS(build_interval_graph({}), std::invalid_argument);
    CHECK_THROWS_AS(build_interval_graph({{"a", 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_interval_graph({{"a", 3, 1}}), std::invalid_argument);
}

TEST_CASE("six-request interval fixture") {
    // Requests 1..6 map to vertices 0..5.
    const std::vector<IntervalRequest> reqs{{"1", 2, 4},  {"2", 10, 14}, {"3", 2, 8},
                                            {"4", 10, 20}, {"5", 6, 17},  {"6", 18, 24}};
    Graph g = build_interval_graph(reqs);
    CHECK(g.num_vertices() == 6);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}});
    // Three resources suffice: {2,4,5} is a triangle, so two do not.
    CHECK_FALSE(exact_k_colorable(g, 2).has_value());
    const auto witness = exact_k_colorable(g, 3);
    REQUIRE(witness.has_value());
    CHECK(clash_report(g, *witness).clashing_edges == 0);
}
