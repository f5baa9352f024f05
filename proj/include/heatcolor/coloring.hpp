#pragma once

#include <string>
#include <vector>

namespace heatcolor {

// Sentinel for vertices the greedy solver could not fit into the color
// budget. Every edge incident to a dummy vertex counts as clashing.
inline constexpr int kDummyColor = -1;

// Per-vertex color assignment over {0..k-1} plus the dummy sentinel.
// Invariants (checked at evaluation time): every non-dummy value < k, and
// the assignment length equals the graph's vertex count.
struct Coloring {
    std::vector<int> assignment;
    int k = 0;
    std::string solver_tag;
};

}  // namespace heatcolor
