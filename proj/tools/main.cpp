#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heatcolor/benchmark.hpp"
#include "heatcolor/dimacs.hpp"
#include "heatcolor/evaluation.hpp"
#include "heatcolor/greedy.hpp"
#include "heatcolor/plots.hpp"
#include "heatcolor/tabucol.hpp"

using namespace heatcolor;

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    for (const auto& item : split_list(text)) {
        std::size_t pos = 0;
        const std::uint64_t seed = std::stoull(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad seed '" + item + "'");
        seeds.push_back(seed);
    }
    return seeds;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

void print_coloring(const Coloring& c) {
    std::cout << "coloring";
    for (int color : c.assignment) std::cout << ' ' << color;
    std::cout << "\n";
}

// Hyperparameter flags shared by `solve` and `bench`.
void add_solver_options(CLI::App* cmd, DiffusionConfig* dc, TabuConfig* tc) {
    cmd->add_option("--T", dc->num_iterations, "heat: gradient iterations");
    cmd->add_option("--alpha", dc->softmax_temp, "heat: softmax temperature");
    cmd->add_option("--eta", dc->step_size, "heat: step size");
    cmd->add_option("--tau0", dc->tau_start, "heat: initial diffusion time");
    cmd->add_option("--tau-min", dc->tau_end, "heat: final diffusion time");
    cmd->add_option("--schedule", dc->schedule, "heat: tau schedule")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, TauSchedule>{{"linear", TauSchedule::linear},
                                               {"geometric", TauSchedule::geometric}}));
    cmd->add_option("--M", dc->num_samples, "heat: Monte-Carlo samples per step");
    cmd->add_option("--composition", dc->composition, "heat: target composition")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Composition>{
            {"smooth_then_softmax", Composition::smooth_then_softmax},
            {"softmax_of_theta", Composition::softmax_of_theta}}));
    cmd->add_option("--theta-init", dc->theta_init, "heat: initial locations")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ThetaInit>{
            {"uniform", ThetaInit::uniform}, {"constant_half", ThetaInit::constant_half}}));
    cmd->add_option("--max-iters", tc->max_iters, "tabucol: iteration cap");
    cmd->add_option("--tenure-base", tc->tenure_base, "tabucol: fixed tabu tenure part");
    cmd->add_option("--tenure-scale", tc->tenure_scale, "tabucol: conflict-scaled tenure part");
}

int run_solve(const std::string& file, const std::string& solver, int k, std::uint64_t seed,
              const DiffusionConfig& dc, const TabuConfig& tc) {
    std::vector<std::string> warnings;
    const Graph g = load_dimacs_file(file, &warnings);
    print_warnings(warnings);

    Coloring coloring;
    long iterations = 0;
    int best_iteration = -1;
    if (solver == "greedy") {
        coloring = greedy_largest_first(g, k);
        iterations = g.num_vertices();
    } else if (solver == "heat") {
        DiffusionConfig cfg = dc;
        cfg.num_colors = k;
        cfg.seed = seed;
        SolveResult result = solve(g, cfg);
        coloring = std::move(result.coloring);
        iterations = cfg.num_iterations;
        best_iteration = result.trace.best_iteration;
    } else {
        TabuConfig cfg = tc;
        cfg.seed = seed;
        TabuStats stats;
        coloring = tabucol(g, k, cfg, &stats);
        iterations = stats.iterations;
    }

    std::cout << "graph " << g.name() << " n=" << g.num_vertices() << " m=" << g.num_edges()
              << "\n";
    std::cout << "solver " << solver << " k=" << k << " seed=" << seed << "\n";
    std::cout << "iterations " << iterations << "\n";
    if (best_iteration >= 0) std::cout << "best_iteration " << best_iteration << "\n";
    if (g.num_edges() > 0) {
        const ClashReport report = clash_report(g, coloring);
        std::cout << "clashing_edges " << report.clashing_edges << "\n";
        std::cout << "clash_percent " << fixed4(report.clash_percent) << "\n";
    } else {
        std::cout << "clashing_edges 0\n";
    }
    print_coloring(coloring);
    return 0;
}

int run_oracle(const std::string& file, int k, int bound) {
    std::vector<std::string> warnings;
    const Graph g = load_dimacs_file(file, &warnings);
    print_warnings(warnings);
    std::cout << "graph " << g.name() << " n=" << g.num_vertices() << " m=" << g.num_edges()
              << "\n";
    if (k > 0) {
        const auto witness = exact_k_colorable(g, k, bound);
        std::cout << "k " << k << "\n";
        std::cout << "k_colorable " << (witness.has_value() ? "true" : "false") << "\n";
        if (witness.has_value()) print_coloring(*witness);
    } else {
        const int chi = chromatic_number(g, bound);
        std::cout << "chromatic_number " << chi << "\n";
        print_coloring(*exact_k_colorable(g, chi, bound));
    }
    return 0;
}

int run_bench(const std::string& dir, const std::string& manifest_path,
              const std::string& solvers_text, const std::string& seeds_text,
              const std::string& out_dir, const BenchConfig& config) {
    const Manifest manifest = load_manifest(manifest_path);
    const std::vector<std::string> solvers = split_list(solvers_text);
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_text);

    std::vector<std::string> warnings;
    const auto records = run_benchmark(dir, manifest, solvers, seeds, config, &warnings);
    print_warnings(warnings);
    write_report(records, out_dir);

    std::cout << "wrote " << out_dir << "/runs.csv (" << records.size() << " records)\n";
    std::cout << "wrote " << out_dir << "/runs.json, fig2.csv, fig3.csv\n";
    for (const auto& s : aggregate(records)) {
        std::cout << s.solver_tag << " mean=" << fixed4(s.mean)
                  << " median=" << fixed4(s.median) << " q1=" << fixed4(s.quartile1)
                  << " q3=" << fixed4(s.quartile3) << " min=" << fixed4(s.min)
                  << " max=" << fixed4(s.max) << "\n";
    }
    return 0;
}

int run_plot(const std::string& in_dir, const std::string& out_dir) {
    const auto fig2 = read_fig2_csv(in_dir + "/fig2.csv");
    const auto fig3 = read_fig3_csv(in_dir + "/fig3.csv");
    emit_plots(fig2, fig3, out_dir);
    std::cout << "wrote " << out_dir << "/fig2.svg (" << fig2.size() << " points)\n";
    std::cout << "wrote " << out_dir << "/fig3.svg (" << fig3.size() << " boxes)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-coloring solver suite: heat diffusion, greedy, TabuCol"};
    app.require_subcommand(1);

    DiffusionConfig dc;
    TabuConfig tc;

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "color one graph with one solver");
    std::string solve_file, solve_solver;
    int solve_k = 0;
    std::uint64_t solve_seed = 0;
    solve_cmd->add_option("file", solve_file, "DIMACS .col file")->required();
    solve_cmd->add_option("--solver", solve_solver, "greedy | heat | tabucol")
        ->required()
        ->check(CLI::IsMember(known_solvers()));
    solve_cmd->add_option("--k", solve_k, "number of colors")
        ->required()
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--seed", solve_seed, "rng seed (heat, tabucol)");
    add_solver_options(solve_cmd, &dc, &tc);

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "run solvers over a graph directory");
    std::string bench_dir, bench_manifest, bench_solvers, bench_out;
    std::string bench_seeds = "0";
    int bench_jobs = 1;
    bench_cmd->add_option("dir", bench_dir, "directory of .col files")->required();
    bench_cmd->add_option("--manifest", bench_manifest, "CSV mapping graph,k")->required();
    bench_cmd->add_option("--solvers", bench_solvers, "comma list of solver tags")->required();
    bench_cmd->add_option("--seeds", bench_seeds, "comma list of seeds (default 0)");
    bench_cmd->add_option("--out", bench_out, "output directory")->required();
    bench_cmd->add_option("--jobs", bench_jobs, "concurrent runs")->check(CLI::PositiveNumber);
    add_solver_options(bench_cmd, &dc, &tc);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact chromatic number / k-colorability");
    std::string oracle_file;
    int oracle_k = 0, oracle_bound = 30;
    oracle_cmd->add_option("file", oracle_file, "DIMACS .col file")->required();
    oracle_cmd->add_option("--k", oracle_k, "test k-colorability instead")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--bound", oracle_bound, "size bound")->check(CLI::PositiveNumber);

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "render fig2.svg / fig3.svg from CSVs");
    std::string plot_in, plot_out;
    plot_cmd->add_option("--in", plot_in, "directory with fig2.csv and fig3.csv")->required();
    plot_cmd->add_option("--out", plot_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve_cmd->parsed()) {
            return run_solve(solve_file, solve_solver, solve_k, solve_seed, dc, tc);
        }
        if (bench_cmd->parsed()) {
            BenchConfig config;
            config.diffusion = dc;
            config.tabu = tc;
            config.jobs = bench_jobs;
            return run_bench(bench_dir, bench_manifest, bench_solvers, bench_seeds, bench_out,
                             config);
        }
        if (oracle_cmd->parsed()) return run_oracle(oracle_file, oracle_k, oracle_bound);
        if (plot_cmd->parsed()) return run_plot(plot_in, plot_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
