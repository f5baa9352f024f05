#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "heatcolor/plots.hpp"

using namespace heatcolor;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& tag) {
    const fs::path p =
        fs::temp_directory_path() / ("heatcolor_plots_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

std::string read_text(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_occurrences(const std::string& haystack, const std::string& needle) {
    int count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

std::vector<Fig2Row> sample_fig2() {
    return {{100, 5.0, "heat"},   {100, 0.0, "tabucol"}, {100, 30.0, "greedy"},
            {2500, 8.5, "heat"},  {2500, 1.2, "tabucol"}, {2500, 62.0, "greedy"},
            {900, 3.3, "heat"}};
}

std::vector<SolverStats> sample_fig3() {
    SolverStats greedy{"greedy", 46.0, 46.0, 38.0, 54.0, 30.0, 62.0};
    SolverStats heat{"heat", 5.6, 5.0, 4.1, 6.7, 3.3, 8.5};
    SolverStats tabu{"tabucol", 0.6, 0.6, 0.3, 0.9, 0.0, 1.2};
    return {greedy, heat, tabu};
}

}  // namespace

TEST_CASE("fig2 csv round-trips through the reader") {
    const auto dir = scratch("fig2");
    write_text(dir / "fig2.csv",
               "edges,clash_percent,solver\n100,5.0000,heat\n2500,62.0000,greedy\n");
    const auto rows = read_fig2_csv((dir / "fig2.csv").string());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].edges == 100);
    CHECK(rows[0].clash_percent == doctest::Approx(5.0));
    CHECK(rows[0].solver == "heat");
    CHECK(rows[1].edges == 2500);
    fs::remove_all(dir);
}

TEST_CASE("fig3 csv round-trips through the reader") {
    const auto dir = scratch("fig3");
    write_text(dir / "fig3.csv",
               "solver,mean,median,q1,q3,min,max\nheat,5.6,5.0,4.1,6.7,3.3,8.5\n");
    const auto rows = read_fig3_csv((dir / "fig3.csv").string());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].solver_tag == "heat");
    CHECK(rows[0].mean == doctest::Approx(5.6));
    CHECK(rows[0].quartile3 == doctest::Approx(6.7));
    fs::remove_all(dir);
}

TEST_CASE("csv readers reject malformed files") {
    const auto dir = scratch("badcsv");
    write_text(dir / "header.csv", "x,y,z\n1,2,heat\n");
    CHECK_THROWS_AS(read_fig2_csv((dir / "header.csv").string()), std::runtime_error);
    write_text(dir / "short.csv", "edges,clash_percent,solver\n100,5.0\n");
    CHECK_THROWS_AS(read_fig2_csv((dir / "short.csv").string()), std::runtime_error);
    write_text(dir / "notnum.csv", "edges,clash_percent,solver\nabc,5.0,heat\n");
    CHECK_THROWS_AS(read_fig2_csv((dir / "notnum.csv").string()), std::runtime_error);
    CHECK_THROWS_AS(read_fig2_csv((dir / "missing.csv").string()), std::runtime_error);
    fs::remove_all(dir);
}

TEST_CASE("scatter plot has one point per row and one series per solver") {
    const auto dir = scratch("scatter");
    emit_plots(sample_fig2(), sample_fig3(), dir.string());
    const std::string svg = read_text(dir / "fig2.svg");
    CHECK(count_occurrences(svg, "<circle class=\"pt\"") ==
          static_cast<int>(sample_fig2().size()));
    CHECK(count_occurrences(svg, "<g class=\"series\"") == 3);
    CHECK(svg.find("data-solver=\"greedy\"") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("boxplot has one box group per solver with a mean marker") {
    const auto dir = scratch("box");
    emit_plots(sample_fig2(), sample_fig3(), dir.string());
    const std::string svg = read_text(dir / "fig3.svg");
    CHECK(count_occurrences(svg, "<g class=\"box\"") == 3);
    CHECK(count_occurrences(svg, "class=\"mean\"") == 3);
    CHECK(svg.find("data-solver=\"tabucol\"") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("empty plot data is an error and writes nothing") {
    const auto dir = scratch("empty");
    CHECK_THROWS_AS(emit_plots({}, sample_fig3(), dir.string()), std::invalid_argument);
    CHECK_THROWS_AS(emit_plots(sample_fig2(), {}, dir.string()), std::invalid_argument);
    CHECK_FALSE(fs::exists(dir / "fig2.svg"));
    CHECK_FALSE(fs::exists(dir / "fig3.svg"));
    fs::remove_all(dir);
}
