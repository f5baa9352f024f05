#pragma once

#include <cstdint>
#include <vector>

#include "heatcolor/coloring.hpp"
#include "heatcolor/graph.hpp"

namespace heatcolor {

struct TabuConfig {
    long max_iters = 100000;
    int tenure_base = 7;
    double tenure_scale = 0.6;
    std::uint64_t seed = 0;
};

void validate(const TabuConfig& cfg);

// Optional observability of a tabucol run; filled only when requested.
struct TabuStats {
    long iterations = 0;      // iterations actually executed
    int initial_conflicts = 0;
    int best_conflicts = 0;
    int final_conflicts = 0;  // incrementally tracked objective at stop
    std::vector<int> final_assignment;
    std::vector<int> incumbent_history;  // best-so-far after each iteration
};

// Tabu search over single-vertex recolor moves. Starts from a uniform-random
// assignment; the objective is the number of conflicting edges. Each
// iteration scans every move (v, c) with v incident to a conflict and
// c != color(v), picking the admissible move with the best resulting
// objective (ties broken uniformly at random). A tabu move is admissible
// only when it would beat the best objective seen so far (aspiration).
// After moving v off color c_old, (v, c_old) stays tabu for
// tenure_base + floor(tenure_scale * conflicts) iterations, with conflicts
// the post-move objective. Stops at zero conflicts or max_iters and returns
// the best assignment seen. Never emits dummy; deterministic given seed.
Coloring tabucol(const Graph& g, int k, const TabuConfig& cfg, TabuStats* stats = nullptr);

}  // namespace heatcolor
