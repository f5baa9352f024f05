#include "heatcolor/evaluation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heatcolor {

ClashReport clash_report(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.num_vertices()) {
        throw std::invalid_argument("assignment length " + std::to_string(c.assignment.size()) +
                                    " does not match n=" + std::to_string(g.num_vertices()));
    }
    if (g.num_edges() < 1) {
        throw std::invalid_argument("clash percentage is undefined for an edgeless graph");
    }
    for (int value : c.assignment) {
        if (value != kDummyColor && (value < 0 || value >= c.k)) {
            throw std::invalid_argument("color " + std::to_string(value) +
                                        " outside budget k=" + std::to_string(c.k));
        }
    }

    ClashReport report;
    report.total_edges = g.num_edges();
    for (const auto& [u, v] : g.edges()) {
        const int cu = c.assignment[u];
        const int cv = c.assignment[v];
        if (cu == kDummyColor || cv == kDummyColor || cu == cv) {
            ++report.clashing_edges;
        }
    }
    report.clash_percent =
        100.0 * static_cast<double>(report.clashing_edges) / static_cast<double>(report.total_edges);
    return report;
}

namespace {

bool extend_coloring(const Graph& g, int k, int v, int colors_used, std::vector<int>& colors) {
    if (v == g.num_vertices()) return true;
    // A new color class may only be opened in index order, which removes the
    // k! color-permutation symmetry (vertex 0 always lands on color 0).
    const int limit = std::min(k - 1, colors_used);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v)) {
            if (u < v && colors[u] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        colors[v] = c;
        if (extend_coloring(g, k, v + 1, std::max(colors_used, c + 1), colors)) return true;
    }
    colors[v] = -1;
    return false;
}

}  // namespace

std::optional<Coloring> exact_k_colorable(const Graph& g, int k, int size_bound) {
    if (k < 1) throw std::invalid_argument("color budget must be >= 1");
    if (g.num_vertices() > size_bound) {
        throw std::invalid_argument("graph exceeds the oracle size bound of " +
                                    std::to_string(size_bound) + " vertices");
    }
    std::vector<int> colors(g.num_vertices(), -1);
    if (!extend_coloring(g, k, 0, 0, colors)) return std::nullopt;

    Coloring witness;
    witness.assignment = std::move(colors);
    witness.k = k;
    witness.solver_tag = "oracle";
    if (g.num_edges() > 0 && clash_report(g, witness).clashing_edges != 0) {
        throw std::logic_error("oracle produced a clashing witness");
    }
    return witness;
}

int chromatic_number(const Graph& g, int size_bound) {
    for (int k = 1; k <= g.num_vertices(); ++k) {
        if (exact_k_colorable(g, k, size_bound).has_value()) return k;
    }
    throw std::logic_error("no coloring found with n colors");  // unreachable
}

namespace {

// Linear interpolation of order statistics at position (n-1)*p.
double quantile_sorted(const std::vector<double>& values, double p) {
    const double pos = static_cast<double>(values.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

}  // namespace

std::vector<SolverStats> aggregate(const std::vector<ClashSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("cannot aggregate an empty run set");
    std::map<std::string, std::vector<double>> by_solver;
    for (const auto& sample : samples) {
        by_solver[sample.solver_tag].push_back(sample.clash_percent);
    }
    std::vector<SolverStats> stats;
    stats.reserve(by_solver.size());
    for (auto& [tag, values] : by_solver) {
        std::sort(values.begin(), values.end());
        SolverStats s;
        s.solver_tag = tag;
        s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
                 static_cast<double>(values.size());
        s.median = quantile_sorted(values, 0.5);
        s.quartile1 = quantile_sorted(values, 0.25);
        s.quartile3 = quantile_sorted(values, 0.75);
        s.min = values.front();
        s.max = values.back();
        stats.push_back(std::move(s));
    }
    return stats;
}

}  // namespace heatcolor
