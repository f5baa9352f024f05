#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "heatcolor/diffusion.hpp"
#include "heatcolor/evaluation.hpp"
#include "test_util.hpp"

using namespace heatcolor;
using namespace testutil;

namespace {

Coloring make_coloring(std::vector<int> assignment, int k) {
    Coloring c;
    c.assignment = std::move(assignment);
    c.k = k;
    return c;
}

}  // namespace

TEST_CASE("clash_report on K3") {
    const Graph g = complete_graph(3);
    CHECK(clash_report(g, make_coloring({0, 1, 2}, 3)).clashing_edges == 0);

    const ClashReport mono = clash_report(g, make_coloring({0, 0, 0}, 1));
    CHECK(mono.clashing_edges == 3);
    CHECK(mono.clash_percent == doctest::Approx(100.0));

    const ClashReport dummy = clash_report(g, make_coloring({0, 1, kDummyColor}, 2));
    CHECK(dummy.clashing_edges == 2);
    CHECK(dummy.total_edges == 3);
    CHECK(dummy.clash_percent == doctest::Approx(66.67).epsilon(0.0002));
}

TEST_CASE("a dummy-dummy edge counts once") {
    const Graph g(2, {{0, 1}});
    const ClashReport r = clash_report(g, make_coloring({kDummyColor, kDummyColor}, 2));
    CHECK(r.clashing_edges == 1);
    CHECK(r.clash_percent == doctest::Approx(100.0));
}

TEST_CASE("clash_report rejects bad input") {
    const Graph g = complete_graph(3);
    CHECK_THROWS_AS(clash_report(g, make_coloring({0, 1}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(clash_report(Graph(3, {}), make_coloring({0, 1, 2}, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(clash_report(g, make_coloring({0, 1, 2}, 2)), std::invalid_argument);
    CHECK_THROWS_AS(clash_report(g, make_coloring({0, 1, -2}, 2)), std::invalid_argument);
}

TEST_CASE("clash_report agrees with a naive recount on all small colorings") {
    const std::vector<Graph> graphs{complete_graph(4), cycle_graph(5), star_graph(3),
                                    random_graph(5, 0.5, 1), random_graph(5, 0.8, 2)};
    for (const auto& g : graphs) {
        // Every assignment over {dummy, 0, 1, 2}.
        std::vector<int> colors(g.num_vertices(), kDummyColor);
        do {
            const ClashReport r = clash_report(g, make_coloring(colors, 3));
            CHECK(r.clashing_edges == naive_clash_count(g, colors));
        } while (next_assignment(colors, 3, kDummyColor));
    }
}

TEST_CASE("one-hot assignments bridge to the relaxation target") {
    const std::vector<Graph> graphs{complete_graph(4), cycle_graph(5),
                                    random_graph(5, 0.6, 3)};
    for (const auto& g : graphs) {
        std::vector<int> colors(g.num_vertices(), 0);
        do {
            const double f = target_value(g, one_hot(colors, 3));
            const int clashes = clash_report(g, make_coloring(colors, 3)).clashing_edges;
            CHECK(f == doctest::Approx(2.0 * clashes).epsilon(1e-12));
        } while (next_assignment(colors, 3));
    }
}

TEST_CASE("oracle decides k-colorability on the classics") {
    const Graph c5 = cycle_graph(5);
    CHECK_FALSE(exact_k_colorable(c5, 2).has_value());
    CHECK(exact_k_colorable(c5, 3).has_value());

    const Graph k4 = complete_graph(4);
    CHECK_FALSE(exact_k_colorable(k4, 3).has_value());
    CHECK(exact_k_colorable(k4, 4).has_value());

    const Graph pet = petersen_graph();
    CHECK_FALSE(exact_k_colorable(pet, 2).has_value());
    CHECK(exact_k_colorable(pet, 3).has_value());
}

TEST_CASE("oracle witnesses are proper colorings within budget") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Graph g = random_graph(9, 0.5, seed + 10);
        for (int k = 1; k <= 4; ++k) {
            const auto witness = exact_k_colorable(g, k);
            if (!witness.has_value()) continue;
            CHECK(naive_clash_count(g, witness->assignment) == 0);
            for (int color : witness->assignment) {
                CHECK(color >= 0);
                CHECK(color < k);
            }
        }
    }
}

TEST_CASE("oracle answers are monotone in k") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = random_graph(8, 0.6, seed + 30);
        bool seen_true = false;
        for (int k = 1; k <= 8; ++k) {
            const bool ok = exact_k_colorable(g, k).has_value();
            if (seen_true) CHECK(ok);  // once colorable, always colorable
            seen_true = seen_true || ok;
        }
        CHECK(seen_true);  // n colors always suffice
    }
}

TEST_CASE("oracle enforces its size bound") {
    const Graph big(31, {});
    CHECK_THROWS_AS(exact_k_colorable(big, 2), std::invalid_argument);
    CHECK_NOTHROW(exact_k_colorable(big, 2, 40));
    CHECK_THROWS_AS(exact_k_colorable(complete_graph(2), 0), std::invalid_argument);
}

TEST_CASE("chromatic numbers of the classics") {
    CHECK(chromatic_number(Graph(10, {})) == 1);
    CHECK(chromatic_number(complete_graph(5)) == 5);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(petersen_graph()) == 3);
    CHECK(chromatic_number(star_graph(4)) == 2);
}

TEST_CASE("chromatic number never exceeds max degree + 1") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Graph g = random_graph(9, 0.5, seed + 70);
        int max_degree = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            max_degree = std::max(max_degree, g.degree(v));
        }
        CHECK(chromatic_number(g) <= max_degree + 1);
    }
}

TEST_CASE("aggregate computes the documented statistics") {
    auto sample = [](const char* tag, double v) { return ClashSample{tag, v}; };

    const auto single = aggregate({sample("a", 10.0)});
    REQUIRE(single.size() == 1);
    CHECK(single[0].mean == doctest::Approx(10.0));
    CHECK(single[0].median == doctest::Approx(10.0));
    CHECK(single[0].quartile1 == doctest::Approx(10.0));
    CHECK(single[0].quartile3 == doctest::Approx(10.0));
    CHECK(single[0].min == doctest::Approx(10.0));
    CHECK(single[0].max == doctest::Approx(10.0));

    const auto three = aggregate({sample("a", 100.0), sample("a", 0.0), sample("a", 50.0)});
    CHECK(three[0].mean == doctest::Approx(50.0));
    CHECK(three[0].median == doctest::Approx(50.0));

    const auto four = aggregate(
        {sample("a", 40.0), sample("a", 10.0), sample("a", 30.0), sample("a", 20.0)});
    CHECK(four[0].quartile1 == doctest::Approx(17.5));
    CHECK(four[0].quartile3 == doctest::Approx(32.5));
    CHECK(four[0].median == doctest::Approx(25.0));
    CHECK(four[0].min == doctest::Approx(10.0));
    CHECK(four[0].max == doctest::Approx(40.0));
}

TEST_CASE("aggregate groups by solver and sorts tags") {
    const auto stats = aggregate({{"tabucol", 5.0}, {"greedy", 20.0}, {"heat", 10.0},
                                  {"greedy", 30.0}});
    REQUIRE(stats.size() == 3);
    CHECK(stats[0].solver_tag == "greedy");
    CHECK(stats[0].mean == doctest::Approx(25.0));
    CHECK(stats[1].solver_tag == "heat");
    CHECK(stats[2].solver_tag == "tabucol");
}

TEST_CASE("aggregate rejects an empty run set") {
    CHECK_THROWS_AS(aggregate(std::vector<ClashSample>{}), std::invalid_argument);
}
