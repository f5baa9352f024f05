#include "heatcolor/dimacs.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heatcolor {

namespace {

[[noreturn]] void fail(int line_no, const std::string& message) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + message);
}

// Strict integer parse of a whole token.
bool parse_int(const std::string& token, long& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::string name, std::vector<std::string>* warnings) {
    std::string line;
    int line_no = 0;
    bool have_problem = false;
    long declared_n = 0;
    long declared_m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;  // blank line
        if (line[start] == 'c') continue;          // comment

        const auto tokens = split_ws(line);
        if (tokens[0] == "p") {
            if (have_problem) fail(line_no, "duplicate problem line");
            if (tokens.size() != 4 || tokens[1] != "edge") {
                fail(line_no, "malformed problem line, expected 'p edge N M'");
            }
            if (!parse_int(tokens[2], declared_n) || !parse_int(tokens[3], declared_m) ||
                declared_n < 1 || declared_m < 0) {
                fail(line_no, "malformed problem line counts in '" + line + "'");
            }
            have_problem = true;
        } else if (tokens[0] == "e") {
            if (!have_problem) fail(line_no, "edge line before problem line");
            long u = 0;
            long v = 0;
            if (tokens.size() != 3 || !parse_int(tokens[1], u) || !parse_int(tokens[2], v)) {
                fail(line_no, "malformed edge line '" + line + "'");
            }
            if (u < 1 || u > declared_n || v < 1 || v > declared_n) {
                fail(line_no, "edge endpoint out of range in '" + line + "'");
            }
            if (u == v) fail(line_no, "self-loop '" + line + "'");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail(line_no, "unparseable line '" + line + "'");
        }
    }
    if (!have_problem) {
        throw std::runtime_error("missing problem line 'p edge N M'");
    }

    Graph g(static_cast<int>(declared_n), std::move(edges), std::move(name));
    if (warnings != nullptr && g.num_edges() != declared_m) {
        warnings->push_back("problem line declares " + std::to_string(declared_m) +
                            " edges, got " + std::to_string(g.num_edges()) +
                            " after deduplication");
    }
    return g;
}

Graph parse_dimacs(const std::string& text, std::string name, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    return parse_dimacs(in, std::move(name), warnings);
}

Graph load_dimacs_file(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    try {
        return parse_dimacs(in, std::filesystem::path(path).stem().string(), warnings);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string serialize_dimacs(const Graph& g) {
    std::string out =
        "p edge " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    }
    return out;
}

void save_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << serialize_dimacs(g);
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

}  // namespace heatcolor
