#include "heatcolor/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "heatcolor/dimacs.hpp"
#include "heatcolor/greedy.hpp"
#include "heatcolor/rng.hpp"

namespace heatcolor {

namespace {

namespace fs = std::filesystem;

// Shortest round-trip decimal form, so snapshots stay readable and stable.
std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string format_fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

std::map<std::string, std::string> diffusion_params(const DiffusionConfig& cfg) {
    return {
        {"T", std::to_string(cfg.num_iterations)},
        {"alpha", format_number(cfg.softmax_temp)},
        {"composition",
         cfg.composition == Composition::smooth_then_softmax ? "smooth_then_softmax"
                                                             : "softmax_of_theta"},
        {"eta", format_number(cfg.step_size)},
        {"M", std::to_string(cfg.num_samples)},
        {"rng", kRngName},
        {"schedule", cfg.schedule == TauSchedule::linear ? "linear" : "geometric"},
        {"tau0", format_number(cfg.tau_start)},
        {"tau_min", format_number(cfg.tau_end)},
        {"theta_init", cfg.theta_init == ThetaInit::uniform ? "uniform" : "constant_half"},
    };
}

std::map<std::string, std::string> tabu_params(const TabuConfig& cfg) {
    return {
        {"max_iters", std::to_string(cfg.max_iters)},
        {"rng", kRngName},
        {"tenure_base", std::to_string(cfg.tenure_base)},
        {"tenure_scale", format_number(cfg.tenure_scale)},
    };
}

struct Task {
    std::size_t graph_index = 0;
    std::string solver;
    std::uint64_t seed = 0;
};

RunRecord execute_task(const Graph& g, int k, const Task& task, const BenchConfig& config) {
    RunRecord record;
    record.graph_name = g.name();
    record.n = g.num_vertices();
    record.m = g.num_edges();
    record.k_used = k;
    record.solver_tag = task.solver;
    record.seed = task.seed;

    const auto start = std::chrono::steady_clock::now();
    Coloring coloring;
    if (task.solver == "greedy") {
        coloring = greedy_largest_first(g, k);
        record.iterations_used = g.num_vertices();
    } else if (task.solver == "heat") {
        DiffusionConfig cfg = config.diffusion;
        cfg.num_colors = k;
        cfg.seed = task.seed;
        SolveResult result = solve(g, cfg);
        coloring = std::move(result.coloring);
        record.iterations_used = cfg.num_iterations;
        record.params = diffusion_params(cfg);
    } else if (task.solver == "tabucol") {
        TabuConfig cfg = config.tabu;
        cfg.seed = task.seed;
        TabuStats stats;
        coloring = tabucol(g, k, cfg, &stats);
        record.iterations_used = stats.iterations;
        record.params = tabu_params(cfg);
    } else {
        throw std::invalid_argument("unknown solver tag '" + task.solver + "'");
    }
    const auto stop = std::chrono::steady_clock::now();
    record.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const ClashReport report = clash_report(g, coloring);
    record.clashing_edges = report.clashing_edges;
    record.clash_percent = report.clash_percent;
    return record;
}

}  // namespace

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest '" + path + "'");

    Manifest manifest;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "graph,k") {
                throw std::runtime_error(path + ": expected header 'graph,k', got '" + line + "'");
            }
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": malformed row '" + line + "'");
        }
        const std::string name = line.substr(0, comma);
        const std::string k_text = line.substr(comma + 1);
        int k = 0;
        auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
        if (ec != std::errc() || ptr != k_text.data() + k_text.size() || k < 1) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": chromatic number must be an integer >= 1, got '" +
                                     k_text + "'");
        }
        if (!manifest.chromatic_k.emplace(name, k).second) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": duplicate graph '" + name + "'");
        }
    }
    if (line_no == 0) throw std::runtime_error(path + ": empty manifest");
    return manifest;
}

std::vector<RunRecord> run_benchmark(const std::string& graph_dir, const Manifest& manifest,
                                     const std::vector<std::string>& solvers,
                                     const std::vector<std::uint64_t>& seeds,
                                     const BenchConfig& config,
                                     std::vector<std::string>* warnings) {
    std::vector<std::string> tags = solvers;
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    if (tags.empty()) throw std::invalid_argument("no solvers requested");
    for (const auto& tag : tags) {
        const auto& known = known_solvers();
        if (std::find(known.begin(), known.end(), tag) == known.end()) {
            throw std::invalid_argument("unknown solver tag '" + tag + "'");
        }
    }
    const bool has_stochastic =
        std::find(tags.begin(), tags.end(), "heat") != tags.end() ||
        std::find(tags.begin(), tags.end(), "tabucol") != tags.end();
    if (has_stochastic && seeds.empty()) {
        throw std::invalid_argument("stochastic solvers need at least one seed");
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(graph_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".col") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<Graph> graphs;
    std::vector<int> graph_k;
    for (const auto& file : files) {
        const std::string stem = file.stem().string();
        const auto it = manifest.chromatic_k.find(stem);
        if (it == manifest.chromatic_k.end()) {
            if (warnings != nullptr) {
                warnings->push_back("skipping '" + file.string() + "': no manifest entry");
            }
            continue;
        }
        graphs.push_back(load_dimacs_file(file.string(), warnings));
        graph_k.push_back(it->second);
    }
    if (graphs.empty()) {
        throw std::invalid_argument("no .col graphs with manifest entries in '" + graph_dir + "'");
    }

    std::vector<Task> tasks;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (const auto& tag : tags) {
            if (tag == "greedy") {
                tasks.push_back({gi, tag, 0});  // deterministic, one run
            } else {
                for (std::uint64_t seed : seeds) tasks.push_back({gi, tag, seed});
            }
        }
    }

    std::vector<RunRecord> records(tasks.size());
    const int jobs = std::clamp<int>(config.jobs, 1, static_cast<int>(tasks.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            records[i] = execute_task(graphs[tasks[i].graph_index], graph_k[tasks[i].graph_index],
                                      tasks[i], config);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    records[i] = execute_task(graphs[tasks[i].graph_index],
                                              graph_k[tasks[i].graph_index], tasks[i], config);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.graph_name, a.solver_tag, a.seed) <
               std::tie(b.graph_name, b.solver_tag, b.seed);
    });
    return records;
}

std::vector<SolverStats> aggregate(const std::vector<RunRecord>& records) {
    std::vector<ClashSample> samples;
    samples.reserve(records.size());
    for (const auto& r : records) samples.push_back({r.solver_tag, r.clash_percent});
    return aggregate(samples);
}

namespace {

std::string params_compact(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [key, value] : params) {
        if (!out.empty()) out += ';';
        out += key + "=" + value;
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

void write_report(const std::vector<RunRecord>& records, const std::string& out_dir) {
    if (records.empty()) throw std::invalid_argument("no records to report");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create '" + out_dir + "': " + ec.message());

    std::string runs_csv =
        "graph,n,m,k,solver,seed,clashing_edges,clash_percent,wall_time_ms,iterations_used,params\n";
    std::string fig2_csv = "edges,clash_percent,solver\n";
    for (const auto& r : records) {
        runs_csv += r.graph_name + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
                    std::to_string(r.k_used) + ',' + r.solver_tag + ',' + std::to_string(r.seed) +
                    ',' + std::to_string(r.clashing_edges) + ',' +
                    format_fixed(r.clash_percent, 4) + ',' + format_fixed(r.wall_time_ms, 3) +
                    ',' + std::to_string(r.iterations_used) + ',' + params_compact(r.params) +
                    '\n';
        fig2_csv += std::to_string(r.m) + ',' + format_fixed(r.clash_percent, 4) + ',' +
                    r.solver_tag + '\n';
    }

    nlohmann::json runs_json = nlohmann::json::array();
    for (const auto& r : records) {
        runs_json.push_back({
            {"graph", r.graph_name},
            {"n", r.n},
            {"m", r.m},
            {"k", r.k_used},
            {"solver", r.solver_tag},
            {"seed", r.seed},
            {"clashing_edges", r.clashing_edges},
            {"clash_percent", r.clash_percent},
            {"wall_time_ms", r.wall_time_ms},
            {"iterations_used", r.iterations_used},
            {"params", r.params},
        });
    }

    std::string fig3_csv = "solver,mean,median,q1,q3,min,max\n";
    for (const auto& s : aggregate(records)) {
        fig3_csv += s.solver_tag + ',' + format_fixed(s.mean, 4) + ',' +
                    format_fixed(s.median, 4) + ',' + format_fixed(s.quartile1, 4) + ',' +
                    format_fixed(s.quartile3, 4) + ',' + format_fixed(s.min, 4) + ',' +
                    format_fixed(s.max, 4) + '\n';
    }

    write_file(fs::path(out_dir) / "runs.csv", runs_csv);
    write_file(fs::path(out_dir) / "runs.json", runs_json.dump(2) + "\n");
    write_file(fs::path(out_dir) / "fig2.csv", fig2_csv);
    write_file(fs::path(out_dir) / "fig3.csv", fig3_csv);
}

}  // namespace heatcolor
