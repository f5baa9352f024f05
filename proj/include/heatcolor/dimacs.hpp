#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heatcolor/graph.hpp"

namespace heatcolor {

// Parse DIMACS .col text: one `p edge N M` problem line before any edge
// lines, edge lines `e u v` with 1-indexed endpoints, comment lines starting
// with `c`. Blank lines are skipped; both \n and \r\n endings are accepted.
// Duplicate edges are collapsed silently; if the resulting edge count differs
// from the declared M, a warning is appended to *warnings. All malformed
// input is rejected via std::runtime_error carrying the line number.
Graph parse_dimacs(std::istream& in, std::string name = "",
                   std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::string name = "",
                   std::vector<std::string>* warnings = nullptr);

// Loads a .col file; the graph name is the file stem.
Graph load_dimacs_file(const std::string& path,
                       std::vector<std::string>* warnings = nullptr);

// Canonical form: `p edge n m`, then edges sorted by (min, max), 1-indexed,
// one per line, trailing newline. parse(serialize(g)) == g.
std::string serialize_dimacs(const Graph& g);

void save_dimacs_file(const Graph& g, const std::string& path);

}  // namespace heatcolor
