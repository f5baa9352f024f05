#include "heatcolor/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace heatcolor {

Coloring greedy_largest_first(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("color budget must be >= 1");
    const int n = g.num_vertices();

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });

    Coloring result;
    result.k = k;
    result.solver_tag = "greedy";
    result.assignment.assign(n, kDummyColor);

    std::vector<bool> blocked(k);
    std::vector<bool> colored(n, false);
    for (int v : order) {
        std::fill(blocked.begin(), blocked.end(), false);
        for (int u : g.neighbors(v)) {
            if (colored[u] && result.assignment[u] != kDummyColor) {
                blocked[result.assignment[u]] = true;
            }
        }
        int chosen = kDummyColor;
        for (int c = 0; c < k; ++c) {
            if (!blocked[c]) {
                chosen = c;
                break;
            }
        }
        result.assignment[v] = chosen;
        colored[v] = true;
    }
    return result;
}

}  // namespace heatcolor
