#include "heatcolor/plots.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace heatcolor {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, const std::string& path, int line_no) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing junk");
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                 ": bad number '" + text + "'");
    }
}

int parse_int(const std::string& text, const std::string& path, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                 ": bad integer '" + text + "'");
    }
    return value;
}

std::vector<std::vector<std::string>> read_csv(const std::string& path,
                                               const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != expected_header) {
                throw std::runtime_error(path + ": expected header '" + expected_header +
                                         "', got '" + line + "'");
            }
            continue;
        }
        rows.push_back(split_csv(line));
    }
    return rows;
}

// Tick labels and coordinates. Coordinates get one decimal; labels drop the
// fraction when it is zero.
std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct Ticks {
    double lo = 0.0;
    double hi = 1.0;
    double step = 0.2;
};

// Expands [lo, hi] to round bounds with a 1/2/5 step, aiming for ~5 ticks.
Ticks nice_ticks(double lo, double hi) {
    if (hi <= lo) hi = lo + 1.0;
    const double raw_step = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
    double step = mag;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw_step) {
            step = mag * mult;
            break;
        }
    }
    Ticks t;
    t.step = step;
    t.lo = std::floor(lo / step) * step;
    t.hi = std::ceil(hi / step) * step;
    return t;
}

const char* solver_color(std::size_t index) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 620.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 390.0;

const char* kStyle =
    "  <style>\n"
    "    text { font-family: sans-serif; font-size: 12px; fill: #333; }\n"
    "    .title { font-size: 15px; }\n"
    "    .axis { stroke: #333; stroke-width: 1; }\n"
    "    .grid { stroke: #ddd; stroke-width: 1; }\n"
    "    .pt { fill-opacity: 0.75; }\n"
    "  </style>\n";

void svg_open(std::string& svg, const std::string& title) {
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"440\" "
           "viewBox=\"0 0 640 440\">\n";
    svg += kStyle;
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"440\" fill=\"#ffffff\"/>\n";
    svg += "  <text class=\"title\" x=\"" + coord(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\">" + xml_escape(title) + "</text>\n";
}

void svg_y_axis(std::string& svg, const Ticks& ty, const std::string& label) {
    for (double v = ty.lo; v <= ty.hi + ty.step * 0.5; v += ty.step) {
        const double y = kBottom - (v - ty.lo) / (ty.hi - ty.lo) * (kBottom - kTop);
        svg += "  <line class=\"grid\" x1=\"" + coord(kLeft) + "\" y1=\"" + coord(y) +
               "\" x2=\"" + coord(kRight) + "\" y2=\"" + coord(y) + "\"/>\n";
        svg += "  <text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(y + 4) +
               "\" text-anchor=\"end\">" + tick_label(v) + "</text>\n";
    }
    svg += "  <line class=\"axis\" x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) +
           "\" x2=\"" + coord(kLeft) + "\" y2=\"" + coord(kBottom) + "\"/>\n";
    svg += "  <line class=\"axis\" x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) +
           "\" x2=\"" + coord(kRight) + "\" y2=\"" + coord(kBottom) + "\"/>\n";
    svg += "  <text transform=\"translate(18," + coord((kTop + kBottom) / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">" + xml_escape(label) + "</text>\n";
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string render_fig2(const std::vector<Fig2Row>& rows) {
    std::vector<std::string> solvers;
    for (const auto& row : rows) solvers.push_back(row.solver);
    std::sort(solvers.begin(), solvers.end());
    solvers.erase(std::unique(solvers.begin(), solvers.end()), solvers.end());

    double max_edges = 1.0;
    double max_clash = 0.0;
    for (const auto& row : rows) {
        max_edges = std::max(max_edges, static_cast<double>(row.edges));
        max_clash = std::max(max_clash, row.clash_percent);
    }
    const Ticks tx = nice_ticks(0.0, max_edges);
    const Ticks ty = nice_ticks(0.0, std::max(max_clash, 1.0));

    std::string svg;
    svg_open(svg, "Clash rate vs graph size");
    svg_y_axis(svg, ty, "clashing edges (%)");
    for (double v = tx.lo; v <= tx.hi + tx.step * 0.5; v += tx.step) {
        const double x = kLeft + (v - tx.lo) / (tx.hi - tx.lo) * (kRight - kLeft);
        svg += "  <line class=\"grid\" x1=\"" + coord(x) + "\" y1=\"" + coord(kBottom) +
               "\" x2=\"" + coord(x) + "\" y2=\"" + coord(kBottom + 5) + "\"/>\n";
        svg += "  <text x=\"" + coord(x) + "\" y=\"" + coord(kBottom + 20) +
               "\" text-anchor=\"middle\">" + tick_label(v) + "</text>\n";
    }
    svg += "  <text x=\"" + coord((kLeft + kRight) / 2) + "\" y=\"" + coord(kHeight - 12) +
           "\" text-anchor=\"middle\">edges</text>\n";

    for (std::size_t si = 0; si < solvers.size(); ++si) {
        svg += "  <g class=\"series\" data-solver=\"" + xml_escape(solvers[si]) + "\">\n";
        for (const auto& row : rows) {
            if (row.solver != solvers[si]) continue;
            const double x = kLeft + (row.edges - tx.lo) / (tx.hi - tx.lo) * (kRight - kLeft);
            const double y =
                kBottom - (row.clash_percent - ty.lo) / (ty.hi - ty.lo) * (kBottom - kTop);
            svg += "    <circle class=\"pt\" cx=\"" + coord(x) + "\" cy=\"" + coord(y) +
                   "\" r=\"4\" fill=\"" + solver_color(si) + "\"/>\n";
        }
        svg += "  </g>\n";
    }

    // Legend in the upper-left corner of the plot area.
    for (std::size_t si = 0; si < solvers.size(); ++si) {
        const double y = kTop + 12 + 18.0 * static_cast<double>(si);
        svg += "  <circle cx=\"" + coord(kLeft + 14) + "\" cy=\"" + coord(y) +
               "\" r=\"4\" fill=\"" + std::string(solver_color(si)) + "\"/>\n";
        svg += "  <text x=\"" + coord(kLeft + 24) + "\" y=\"" + coord(y + 4) + "\">" +
               xml_escape(solvers[si]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_fig3(const std::vector<SolverStats>& stats) {
    double max_clash = 0.0;
    for (const auto& s : stats) max_clash = std::max(max_clash, s.max);
    const Ticks ty = nice_ticks(0.0, std::max(max_clash, 1.0));

    std::string svg;
    svg_open(svg, "Clash rate by solver");
    svg_y_axis(svg, ty, "clashing edges (%)");

    const double slot = (kRight - kLeft) / static_cast<double>(stats.size());
    const double box_w = std::min(60.0, slot * 0.5);
    auto y_of = [&](double v) {
        return kBottom - (v - ty.lo) / (ty.hi - ty.lo) * (kBottom - kTop);
    };

    for (std::size_t si = 0; si < stats.size(); ++si) {
        const auto& s = stats[si];
        const double cx = kLeft + slot * (static_cast<double>(si) + 0.5);
        const char* color = solver_color(si);
        svg += "  <g class=\"box\" data-solver=\"" + xml_escape(s.solver_tag) + "\">\n";
        // whiskers with caps
        svg += "    <line class=\"axis\" x1=\"" + coord(cx) + "\" y1=\"" + coord(y_of(s.min)) +
               "\" x2=\"" + coord(cx) + "\" y2=\"" + coord(y_of(s.quartile1)) + "\"/>\n";
        svg += "    <line class=\"axis\" x1=\"" + coord(cx) + "\" y1=\"" +
               coord(y_of(s.quartile3)) + "\" x2=\"" + coord(cx) + "\" y2=\"" +
               coord(y_of(s.max)) + "\"/>\n";
        for (double v : {s.min, s.max}) {
            svg += "    <line class=\"axis\" x1=\"" + coord(cx - box_w / 4) + "\" y1=\"" +
                   coord(y_of(v)) + "\" x2=\"" + coord(cx + box_w / 4) + "\" y2=\"" +
                   coord(y_of(v)) + "\"/>\n";
        }
        const double box_top = y_of(s.quartile3);
        const double box_h = std::max(y_of(s.quartile1) - box_top, 0.5);
        svg += "    <rect x=\"" + coord(cx - box_w / 2) + "\" y=\"" + coord(box_top) +
               "\" width=\"" + coord(box_w) + "\" height=\"" + coord(box_h) + "\" fill=\"" +
               color + "\" fill-opacity=\"0.35\" stroke=\"" + color + "\"/>\n";
        svg += "    <line x1=\"" + coord(cx - box_w / 2) + "\" y1=\"" + coord(y_of(s.median)) +
               "\" x2=\"" + coord(cx + box_w / 2) + "\" y2=\"" + coord(y_of(s.median)) +
               "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "    <circle class=\"mean\" cx=\"" + coord(cx) + "\" cy=\"" + coord(y_of(s.mean)) +
               "\" r=\"3.5\" fill=\"#ffffff\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        svg += "  </g>\n";
        svg += "  <text x=\"" + coord(cx) + "\" y=\"" + coord(kBottom + 20) +
               "\" text-anchor=\"middle\">" + xml_escape(s.solver_tag) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace

std::vector<Fig2Row> read_fig2_csv(const std::string& path) {
    std::vector<Fig2Row> rows;
    int line_no = 1;
    for (const auto& fields : read_csv(path, "edges,clash_percent,solver")) {
        ++line_no;
        if (fields.size() != 3) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": expected 3 fields, got " +
                                     std::to_string(fields.size()));
        }
        Fig2Row row;
        row.edges = parse_int(fields[0], path, line_no);
        row.clash_percent = parse_double(fields[1], path, line_no);
        row.solver = fields[2];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SolverStats> read_fig3_csv(const std::string& path) {
    std::vector<SolverStats> rows;
    int line_no = 1;
    for (const auto& fields : read_csv(path, "solver,mean,median,q1,q3,min,max")) {
        ++line_no;
        if (fields.size() != 7) {
            throw std::runtime_error(path + " line " + std::to_string(line_no) +
                                     ": expected 7 fields, got " +
                                     std::to_string(fields.size()));
        }
        SolverStats s;
        s.solver_tag = fields[0];
        s.mean = parse_double(fields[1], path, line_no);
        s.median = parse_double(fields[2], path, line_no);
        s.quartile1 = parse_double(fields[3], path, line_no);
        s.quartile3 = parse_double(fields[4], path, line_no);
        s.min = parse_double(fields[5], path, line_no);
        s.max = parse_double(fields[6], path, line_no);
        rows.push_back(std::move(s));
    }
    return rows;
}

void emit_plots(const std::vector<Fig2Row>& fig2, const std::vector<SolverStats>& fig3,
                const std::string& out_dir) {
    if (fig2.empty()) throw std::invalid_argument("no scatter rows to plot");
    if (fig3.empty()) throw std::invalid_argument("no solver stats to plot");
    const std::string svg2 = render_fig2(fig2);
    const std::string svg3 = render_fig3(fig3);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create '" + out_dir + "': " + ec.message());
    write_file(fs::path(out_dir) / "fig2.svg", svg2);
    write_file(fs::path(out_dir) / "fig3.svg", svg3);
}

}  // namespace heatcolor
