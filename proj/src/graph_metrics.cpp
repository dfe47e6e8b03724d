#include "qgg/graph_metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgg {

namespace {

// Rotate so the minimum vertex leads, then pick the direction whose second
// vertex is smaller.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() >= 3 && cycle[1] > cycle.back())
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

}  // namespace

bool is_connected(const Graph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int found = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const auto& [v, idx] : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++found;
                queue.push_back(v);
            }
        }
    }
    return found == g.vertex_count();
}

GirthReport girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    int best_root = -1, best_u = -1, best_v = -1;
    std::vector<int> dist(n), parent(n), queue;
    queue.reserve(n);

    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        parent[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (const auto& [v, idx] : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) {
                        best = len;
                        best_root = root;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
        }
    }

    GirthReport report;
    if (best < 0) return report;  // acyclic
    report.girth = best;

    // Rebuild the witness from the best (root, u, v) triple: the two BFS
    // paths meet only at the root, otherwise a shorter cycle would exist.
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(best_root);
    dist[best_root] = 0;
    parent[best_root] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const auto& [v, idx] : g.neighbors(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    std::vector<int> left, right;
    for (int u = best_u; u >= 0; u = parent[u]) left.push_back(u);
    for (int v = best_v; v >= 0; v = parent[v]) right.push_back(v);
    std::reverse(left.begin(), left.end());  // root .. u
    std::vector<int> cycle = left;           // root .. u, then v back down to the root
    for (std::size_t t = 0; t + 1 < right.size(); ++t) cycle.push_back(right[t]);
    report.witness_cycle = canonical_cycle(std::move(cycle));
    return report;
}

BipartitionReport bipartition(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("bipartition: graph must be connected");
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    BipartitionReport report;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const auto& [v, idx] : g.neighbors(u)) {
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return report;  // odd cycle
            }
        }
    }
    report.is_bipartite = true;
    for (int v = 0; v < n; ++v) report.parts[color[v]].push_back(v);
    return report;
}

CompleteBipartiteReport is_complete_bipartite(const Graph& g) {
    BipartitionReport bp = bipartition(g);
    CompleteBipartiteReport report;
    if (!bp.is_bipartite) return report;
    report.parts = bp.parts;
    if (bp.parts[0].empty() || bp.parts[1].empty()) return report;
    for (int u : bp.parts[0])
        for (int v : bp.parts[1])
            if (!g.has_edge(u, v)) return report;
    report.is_complete_bipartite = true;
    return report;
}

std::vector<int> find_induced_cycle_of_girth(const Graph& g) {
    GirthReport report = girth(g);
    if (report.is_acyclic())
        throw std::invalid_argument("find_induced_cycle_of_girth: graph is acyclic");
    return report.witness_cycle;
}

std::vector<std::vector<int>> all_cycles_up_to(const Graph& g, int max_len) {
    if (max_len < 3) throw std::invalid_argument("all_cycles_up_to: max_len must be >= 3");
    std::vector<std::vector<int>> out;
    const int n = g.vertex_count();
    std::vector<char> in_path(n, 0);
    std::vector<int> path;

    // DFS from each start s over vertices > s; emitting only paths whose
    // second vertex is smaller than their last deduplicates the two
    // traversal directions.
    auto dfs = [&](auto&& self, int s, int u) -> void {
        for (const auto& [v, idx] : g.neighbors(u)) {
            if (v == s && path.size() >= 3 && path[1] < path.back())
                out.push_back(path);
            if (v <= s || in_path[v]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(v);
            in_path[v] = 1;
            self(self, s, v);
            in_path[v] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path.assign(1, s);
        in_path.assign(n, 0);
        in_path[s] = 1;
        dfs(dfs, s, s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

bool is_valid_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) return false;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t t = 0; t < cycle.size(); ++t)
        if (!g.has_edge(cycle[t], cycle[(t + 1) % cycle.size()])) return false;
    return true;
}

}  // namespace qgg
