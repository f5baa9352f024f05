#pragma once

#include <string>
#include <vector>

#include "heatcolor/evaluation.hpp"

namespace heatcolor {

// One scatter point of the clash-vs-edges figure.
struct Fig2Row {
    int edges = 0;
    double clash_percent = 0.0;
    std::string solver;
};

std::vector<Fig2Row> read_fig2_csv(const std::string& path);
std::vector<SolverStats> read_fig3_csv(const std::string& path);

// Renders fig2.svg (scatter of clash percent vs edge count, one series per
// solver) and fig3.svg (one box per solver with a mean marker) into out_dir.
// Pure rendering of the CSV data; empty input is an error and writes nothing.
void emit_plots(const std::vector<Fig2Row>& fig2, const std::vector<SolverStats>& fig3,
                const std::string& out_dir);

}  // namespace heatcolor
