#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "heatcolor/dimacs.hpp"
#include "test_util.hpp"

using namespace heatcolor;

TEST_CASE("parses a plain K3") {
    Graph g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("collapses reversed duplicates and warns about the declared count") {
    std::vector<std::string> warnings;
    Graph g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1", "", &warnings);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    // Declared M = 1 matches the deduplicated count: no warning.
    CHECK(warnings.empty());

    Graph h = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1", "", &warnings);
    CHECK(h.num_edges() == 1);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("declares 2") != std::string::npos);
}

TEST_CASE("skips comments, blank lines, and CRLF endings") {
    Graph g = parse_dimacs("c header\r\n\r\np edge 3 2\nc mid\ne 1 2\r\ne 2 3\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
}

TEST_CASE("rejects malformed input with the offending line number") {
    auto message_of = [](const std::string& text) {
        try {
            parse_dimacs(text);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("p edge 2 1\ne 1 1").find("line 2") != std::string::npos);
    CHECK(message_of("p edge 2 1\ne 1 1").find("self-loop") != std::string::npos);
    CHECK(message_of("e 1 2\np edge 2 1").find("line 1") != std::string::npos);
    CHECK(message_of("p edge 2 1\ne 0 2").find("out of range") != std::string::npos);
    CHECK(message_of("p edge 2 1\ne 1 3").find("out of range") != std::string::npos);
    CHECK(message_of("p edge 2 1\nq 1 2").find("unparseable") != std::string::npos);
    CHECK(message_of("p edge 2 1\ne 1 2\np edge 2 1").find("duplicate problem") !=
          std::string::npos);
    CHECK(message_of("p edge 2 1\ne 1 two").find("malformed edge") != std::string::npos);
    CHECK(message_of("p node 2 1").find("p edge") != std::string::npos);
    CHECK(message_of("c only comments").find("missing problem line") != std::string::npos);
    CHECK(message_of("p edge 0 0").find("counts") != std::string::npos);
}

TEST_CASE("serialization is canonical and round-trips") {
    Graph g(3, {{2, 1}, {0, 2}, {1, 0}}, "k3");
    const std::string text = serialize_dimacs(g);
    CHECK(text == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    Graph back = parse_dimacs(text);
    CHECK(back == g);
    CHECK(serialize_dimacs(back) == text);
}

TEST_CASE("round-trips random graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph g = testutil::random_graph(12, 0.4, seed);
        Graph back = parse_dimacs(serialize_dimacs(g));
        CHECK(back == g);
    }
}

TEST_CASE("round-trips an edgeless graph") {
    Graph g(4, {});
    CHECK(serialize_dimacs(g) == "p edge 4 0\n");
    CHECK(parse_dimacs(serialize_dimacs(g)) == g);
}

TEST_CASE("load names the graph after the file stem") {
    const auto dir = testutil::data_dir();
    Graph g = load_dimacs_file(dir + "/k3.col");
    CHECK(g.name() == "k3");
    CHECK(g.num_edges() == 3);
    CHECK_THROWS_AS(load_dimacs_file(dir + "/no_such_file.col"), std::runtime_error);
}

TEST_CASE("messy fixture parses with a dedup warning") {
    std::vector<std::string> warnings;
    Graph g = load_dimacs_file(testutil::data_dir() + "/dirty.col", &warnings);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(warnings.size() == 1);
}

TEST_CASE("every bundled fixture round-trips") {
    namespace fs = std::filesystem;
    int checked = 0;
    for (const auto& entry : fs::recursive_directory_iterator(testutil::data_dir())) {
        if (!entry.is_regular_file() || entry.path().extension() != ".col") continue;
        CAPTURE(entry.path().string());
        Graph g = load_dimacs_file(entry.path().string());
        Graph back = parse_dimacs(serialize_dimacs(g));
        CHECK(back == g);
        CHECK(serialize_dimacs(back) == serialize_dimacs(g));
        ++checked;
    }
    CHECK(checked >= 9);
}

TEST_CASE("save writes a loadable file") {
    namespace fs = std::filesystem;
    const auto path = (fs::temp_directory_path() / "heatcolor_roundtrip.col").string();
    Graph g = testutil::petersen_graph();
    save_dimacs_file(g, path);
    CHECK(load_dimacs_file(path) == g);
    fs::remove(path);
}
