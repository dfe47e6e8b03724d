#pragma once

#include <array>
#include <optional>
#include <vector>

#include "qgg/graph.hpp"

namespace qgg {

/// Girth of a graph with a shortest cycle as witness; girth is empty for
/// acyclic graphs, which are a first-class answer at this layer (the theorem
/// layer turns them into an error).
struct GirthReport {
    std::optional<int> girth;
    std::vector<int> witness_cycle;  // canonical rotation, empty when acyclic
    bool is_acyclic() const { return !girth.has_value(); }
};

struct BipartitionReport {
    bool is_bipartite = false;
    std::array<std::vector<int>, 2> parts;  // empty when not bipartite
};

struct CompleteBipartiteReport {
    bool is_complete_bipartite = false;
    std::array<std::vector<int>, 2> parts;
};

/// BFS reachability from vertex 0 covers every vertex.
bool is_connected(const Graph& g);

/// Exact girth by BFS from every root: a non-tree edge between vertices at
/// depths d(x), d(y) bounds a cycle of length d(x)+d(y)+1, and the minimum
/// over all roots is attained. O(V*E).
GirthReport girth(const Graph& g);

/// 2-coloring by BFS parity. Requires a connected graph.
BipartitionReport bipartition(const Graph& g);

/// Bipartite with every cross pair present and both parts nonempty.
/// Requires a connected graph.
CompleteBipartiteReport is_complete_bipartite(const Graph& g);

/// A shortest cycle (which is automatically chordless). Throws on acyclic
/// input.
std::vector<int> find_induced_cycle_of_girth(const Graph& g);

/// Every simple cycle of length in [3, max_len], each exactly once in
/// canonical form: lowest vertex first, then the direction whose second
/// vertex is smaller. Sorted by (length, vertex sequence).
std::vector<std::vector<int>> all_cycles_up_to(const Graph& g, int max_len);

/// Validates that the sequence is a simple cycle of g (distinct vertices,
/// length >= 3, consecutive plus closing adjacency).
bool is_valid_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace qgg
