#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "heatcolor/diffusion.hpp"
#include "heatcolor/evaluation.hpp"
#include "heatcolor/tabucol.hpp"

namespace heatcolor {

// One solver x graph x seed outcome. params holds the full hyperparameter
// snapshot needed to rerun the exact run (including the generator name).
struct RunRecord {
    std::string graph_name;
    int n = 0;
    int m = 0;
    int k_used = 0;
    std::string solver_tag;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> params;
    int clashing_edges = 0;
    double clash_percent = 0.0;
    double wall_time_ms = 0.0;
    long iterations_used = 0;
};

// graph name -> known chromatic number.
struct Manifest {
    std::map<std::string, int> chromatic_k;
};

// CSV with header `graph,k`. Duplicate names, k < 1, and malformed rows are
// rejected.
Manifest load_manifest(const std::string& path);

struct BenchConfig {
    DiffusionConfig diffusion;  // num_colors and seed overridden per run
    TabuConfig tabu;            // seed overridden per run
    int jobs = 1;               // independent runs dispatched concurrently
};

inline const std::vector<std::string>& known_solvers() {
    static const std::vector<std::string> tags{"greedy", "heat", "tabucol"};
    return tags;
}

// Runs every requested solver on every .col file in graph_dir that has a
// manifest entry, once per seed for the stochastic solvers and once per
// graph for greedy (which ignores seeds). k is taken from the manifest.
// Files without a manifest entry are skipped with a warning. Records come
// back sorted by (graph name, solver tag, seed), so concurrency never
// changes the output.
std::vector<RunRecord> run_benchmark(const std::string& graph_dir,
                                     const Manifest& manifest,
                                     const std::vector<std::string>& solvers,
                                     const std::vector<std::uint64_t>& seeds,
                                     const BenchConfig& config,
                                     std::vector<std::string>* warnings = nullptr);

// Per-solver stats over the records' clash percentages.
std::vector<SolverStats> aggregate(const std::vector<RunRecord>& records);

// Emits runs.csv, runs.json, fig2.csv (edges,clash_percent,solver scatter
// data) and fig3.csv (per-solver stats rows) into out_dir. Byte-stable given
// identical records; percentages are formatted to 4 decimal places.
void write_report(const std::vector<RunRecord>& records, const std::string& out_dir);

}  // namespace heatcolor
