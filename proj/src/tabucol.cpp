#include "heatcolor/tabucol.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "heatcolor/rng.hpp"

namespace heatcolor {

void validate(const TabuConfig& cfg) {
    if (cfg.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (cfg.tenure_base < 0) throw std::invalid_argument("tenure_base must be >= 0");
    if (!(cfg.tenure_scale >= 0.0)) throw std::invalid_argument("tenure_scale must be >= 0");
}

Coloring tabucol(const Graph& g, int k, const TabuConfig& cfg, TabuStats* stats) {
    if (k < 1) throw std::invalid_argument("color budget must be >= 1");
    validate(cfg);

    const int n = g.num_vertices();
    Rng rng(cfg.seed);

    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) {
        color[v] = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
    }

    // neighbor_colors[v*k + c] = number of neighbors of v currently colored c.
    // Moving v to c changes the objective by exactly
    // neighbor_colors[v][c] - neighbor_colors[v][color[v]].
    std::vector<int> neighbor_colors(static_cast<std::size_t>(n) * k, 0);
    int conflicts = 0;
    for (const auto& [u, v] : g.edges()) {
        ++neighbor_colors[static_cast<std::size_t>(u) * k + color[v]];
        ++neighbor_colors[static_cast<std::size_t>(v) * k + color[u]];
        if (color[u] == color[v]) ++conflicts;
    }

    std::vector<int> best_color = color;
    int best_conflicts = conflicts;
    const int initial_conflicts = conflicts;

    // (v, c) is forbidden at iteration j while j < tabu_until[v*k + c].
    std::vector<long> tabu_until(static_cast<std::size_t>(n) * k, 0);

    long iter = 0;
    for (; iter < cfg.max_iters && best_conflicts > 0 && k > 1; ++iter) {
        int move_vertex = -1;
        int move_color = -1;
        int move_delta = 0;
        std::uint64_t tie_count = 0;

        for (int v = 0; v < n; ++v) {
            const int* counts = neighbor_colors.data() + static_cast<std::size_t>(v) * k;
            const int own = counts[color[v]];
            if (own == 0) continue;  // v is not on any conflicting edge
            for (int c = 0; c < k; ++c) {
                if (c == color[v]) continue;
                const int delta = counts[c] - own;
                const bool tabu = iter < tabu_until[static_cast<std::size_t>(v) * k + c];
                if (tabu && conflicts + delta >= best_conflicts) continue;  // no aspiration
                if (move_vertex == -1 || delta < move_delta) {
                    move_vertex = v;
                    move_color = c;
                    move_delta = delta;
                    tie_count = 1;
                } else if (delta == move_delta) {
                    // Reservoir choice keeps each tied move equally likely.
                    ++tie_count;
                    if (uniform_below(rng, tie_count) == 0) {
                        move_vertex = v;
                        move_color = c;
                    }
                }
            }
        }
        if (move_vertex == -1) continue;  // everything tabu and nothing aspires

        const int old_color = color[move_vertex];
        color[move_vertex] = move_color;
        conflicts += move_delta;
        for (int u : g.neighbors(move_vertex)) {
            --neighbor_colors[static_cast<std::size_t>(u) * k + old_color];
            ++neighbor_colors[static_cast<std::size_t>(u) * k + move_color];
        }

        const long tenure =
            cfg.tenure_base + static_cast<long>(std::floor(cfg.tenure_scale * conflicts));
        tabu_until[static_cast<std::size_t>(move_vertex) * k + old_color] = iter + 1 + tenure;

        if (conflicts < best_conflicts) {
            best_conflicts = conflicts;
            best_color = color;
        }
        if (stats != nullptr) stats->incumbent_history.push_back(best_conflicts);
    }

    if (stats != nullptr) {
        stats->iterations = iter;
        stats->initial_conflicts = initial_conflicts;
        stats->best_conflicts = best_conflicts;
        stats->final_conflicts = conflicts;
        stats->final_assignment = color;
    }

    Coloring result;
    result.assignment = std::move(best_color);
    result.k = k;
    result.solver_tag = "tabucol";
    return result;
}

}  // namespace heatcolor
