#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heatcolor/coloring.hpp"
#include "heatcolor/graph.hpp"

namespace heatcolor {

struct ClashReport {
    int clashing_edges = 0;
    int total_edges = 0;
    double clash_percent = 0.0;  // 100 * clashing / total
};

// An edge (u,v) clashes iff both endpoints share a non-dummy color, or either
// endpoint is dummy. Each edge is counted at most once. Requires m >= 1 (the
// percentage is undefined on edgeless graphs) and an assignment of length n.
ClashReport clash_report(const Graph& g, const Coloring& c);

// Exhaustive backtracking with canonical color-class pruning (vertex 0 is
// fixed to color 0, and each vertex may open at most one new color class).
// Returns a verified zero-clash witness when the graph is k-colorable,
// std::nullopt otherwise. Throws when n exceeds size_bound.
std::optional<Coloring> exact_k_colorable(const Graph& g, int k, int size_bound = 30);

// Smallest k for which exact_k_colorable succeeds.
int chromatic_number(const Graph& g, int size_bound = 30);

struct SolverStats {
    std::string solver_tag;
    double mean = 0.0;
    double median = 0.0;
    double quartile1 = 0.0;
    double quartile3 = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// One (solver tag, clash percent) sample of a run set.
struct ClashSample {
    std::string solver_tag;
    double clash_percent = 0.0;
};

// Per-solver mean/median/quartiles over clash percentages. Quartiles use
// linear interpolation of order statistics at position (n-1)*p. Output is
// sorted by solver tag; empty input is an error.
std::vector<SolverStats> aggregate(const std::vector<ClashSample>& samples);

}  // namespace heatcolor
