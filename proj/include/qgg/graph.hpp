#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qgg {

/// Undirected edge stored on its canonical orientation, u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph: no loops, no parallel edges. Vertices are
/// 0..n-1; edges are kept sorted lexicographically and adjacency lists in
/// ascending neighbor order, so every traversal in the library is
/// deterministic.
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
        if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
        edges_.reserve(edge_pairs.size());
        for (auto [u, v] : edge_pairs) {
            if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::out_of_range("Graph: vertex index out of range");
            if (u > v) std::swap(u, v);
            edges_.push_back({u, v});
        }
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) {
                      return a.u != b.u ? a.u < b.u : a.v < b.v;
                  });
        for (std::size_t t = 1; t < edges_.size(); ++t)
            if (edges_[t] == edges_[t - 1])
                throw std::invalid_argument("Graph: parallel edges are not allowed");

        adj_.assign(n_, {});
        for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
            adj_[edges_[idx].u].push_back({edges_[idx].v, idx});
            adj_[edges_[idx].v].push_back({edges_[idx].u, idx});
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// (neighbor, edge index) pairs in ascending neighbor order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// Index into edges() or -1.
    int edge_index(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
        for (const auto& [w, idx] : adj_[u])
            if (w == v) return idx;
        return -1;
    }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

}  // namespace qgg
