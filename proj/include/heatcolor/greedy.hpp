#pragma once

#include "heatcolor/coloring.hpp"
#include "heatcolor/graph.hpp"

namespace heatcolor {

// Largest-first greedy: vertices in order of decreasing degree (ties by
// ascending index) each take the smallest color in {0..k-1} unused by their
// already-colored neighbors, or the dummy color when all k are blocked.
// Deterministic. Among non-dummy vertices the result is always proper.
Coloring greedy_largest_first(const Graph& g, int k);

}  // namespace heatcolor
