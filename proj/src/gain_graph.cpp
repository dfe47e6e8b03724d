#include "qgg/gain_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgg/graph_metrics.hpp"

namespace qgg {

namespace {

std::vector<std::pair<int, int>> strip_gains(const std::vector<GainGraph::OrientedGain>& eg) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(eg.size());
    for (const auto& e : eg) pairs.emplace_back(e.from, e.to);
    return pairs;
}

}  // namespace

GainGraph::GainGraph(int n, const std::vector<OrientedGain>& edge_gains)
    : graph_(n, strip_gains(edge_gains)),
      gains_(edge_gains.size(), UnitQuaternion::one()) {
    for (const auto& e : edge_gains) {
        int idx = graph_.edge_index(e.from, e.to);
        gains_[idx] = e.from < e.to ? e.gain : e.gain.conjugate();
    }
}

GainGraph::GainGraph(Graph graph, std::vector<UnitQuaternion> gains)
    : graph_(std::move(graph)), gains_(std::move(gains)) {
    if (static_cast<int>(gains_.size()) != graph_.edge_count())
        throw std::invalid_argument("GainGraph: one gain per edge required");
}

UnitQuaternion GainGraph::gain_of(int u, int v) const {
    int idx = graph_.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("GainGraph: not an edge");
    return u < v ? gains_[idx] : gains_[idx].conjugate();
}

QMatrix GainGraph::adjacency_matrix() const {
    QMatrix a(vertex_count(), vertex_count());
    for (int idx = 0; idx < edge_count(); ++idx) {
        const Edge& e = graph_.edges()[idx];
        a.at(e.u, e.v) = gains_[idx].value();
        a.at(e.v, e.u) = gains_[idx].value().conjugate();
    }
    return a;
}

GainGraph GainGraph::switched(const SwitchingFunction& theta) const {
    if (theta.size() != vertex_count())
        throw std::invalid_argument("switched: switching function must cover every vertex");
    std::vector<UnitQuaternion> gains;
    gains.reserve(gains_.size());
    for (int idx = 0; idx < edge_count(); ++idx) {
        const Edge& e = graph_.edges()[idx];
        gains.push_back(theta.at(e.u).conjugate() * gains_[idx] * theta.at(e.v));
    }
    return GainGraph(graph_, std::move(gains));
}

UnitQuaternion walk_gain(const GainGraph& g, const Walk& w) {
    if (w.vertices.empty()) throw std::invalid_argument("walk_gain: empty vertex sequence");
    UnitQuaternion acc = UnitQuaternion::one();
    for (std::size_t t = 0; t + 1 < w.vertices.size(); ++t)
        acc = acc * g.gain_of(w.vertices[t], w.vertices[t + 1]);  // right accumulation
    return acc;
}

namespace {

UnitQuaternion closed_cycle_gain(const GainGraph& g, const std::vector<int>& cycle) {
    if (!is_valid_cycle(g.underlying(), cycle))
        throw std::invalid_argument("cycle gain: not a cycle of the graph");
    Walk w;
    w.vertices = cycle;
    w.vertices.push_back(cycle.front());
    return walk_gain(g, w);
}

}  // namespace

Rational cycle_gain_real_part(const GainGraph& g, const std::vector<int>& cycle) {
    return closed_cycle_gain(g, cycle).value().real_part();
}

bool cycle_gain_is_real(const GainGraph& g, const std::vector<int>& cycle) {
    return closed_cycle_gain(g, cycle).value().imag_part().is_zero();
}

std::pair<GainGraph, SwitchingFunction> normalize_to_spanning_tree(const GainGraph& g) {
    if (!is_connected(g.underlying()))
        throw std::invalid_argument("normalize_to_spanning_tree: graph must be connected");

    // BFS from vertex 0, neighbors ascending. A tree edge (u, v) gets gain 1
    // after switching when theta(v) = phi(u,v)* theta(u).
    const int n = g.vertex_count();
    std::vector<UnitQuaternion> theta(n, UnitQuaternion::one());
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (const auto& [v, idx] : g.underlying().neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = 1;
            theta[v] = g.gain_of(u, v).conjugate() * theta[u];
            queue.push_back(v);
        }
    }
    SwitchingFunction tf{std::move(theta)};
    return {g.switched(tf), std::move(tf)};
}

}  // namespace qgg
