#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heatcolor {

// Unordered vertex pair, stored as (min, max).
using Edge = std::pair<int, int>;

// Immutable undirected simple graph. Vertices are 0-indexed internally; the
// DIMACS layer converts to and from 1-indexed identifiers at the boundary.
// Safe to share read-only across concurrent workers.
class Graph {
public:
    // Validates and normalizes the edge list: endpoints must be in [0, n),
    // self-loops are rejected, duplicates (including reversed ones) collapse
    // to a single edge.
    Graph(int n, std::vector<Edge> edges, std::string name = "");

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    // Canonical edge list, sorted by (min endpoint, max endpoint).
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list of v. Throws std::out_of_range for bad v.
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;

    const std::string& name() const { return name_; }

    // Structural equality: vertex count and edge set (name is metadata).
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> adj_offsets_;  // CSR layout, size n+1
    std::vector<int> adj_;
    std::string name_;
};

// A resource request over the half-open time span [start, end).
struct IntervalRequest {
    std::string id;
    double start = 0.0;
    double end = 0.0;
};

// One vertex per request; an edge wherever two intervals overlap. Overlap is
// strict (start_i < end_j && start_j < end_i), so touching endpoints do not
// conflict: a resource freed at time t is reusable at t.
Graph build_interval_graph(const std::vector<IntervalRequest>& requests);

}  // namespace heatcolor
