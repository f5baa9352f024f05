#include "heatcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heatcolor {

Graph::Graph(int n, std::vector<Edge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    }
    for (auto& [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    adj_offsets_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    adj_.resize(adj_offsets_[n_]);
    std::vector<int> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
    }
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + adj_offsets_[v],
            static_cast<std::size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_offsets_[v + 1] - adj_offsets_[v];
}

Graph build_interval_graph(const std::vector<IntervalRequest>& requests) {
    if (requests.empty()) {
        throw std::invalid_argument("interval graph needs at least one request");
    }
    for (const auto& r : requests) {
        if (!(r.end > r.start)) {
            throw std::invalid_argument("request '" + r.id + "' has end <= start");
        }
    }
    const int n = static_cast<int>(requests.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (requests[i].start < requests[j].end && requests[j].start < requests[i].end) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, std::move(edges), "interval");
}

}  // namespace heatcolor
