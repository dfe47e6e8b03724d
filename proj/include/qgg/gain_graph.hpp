#pragma once

#include <utility>
#include <vector>

#include "qgg/graph.hpp"
#include "qgg/qmatrix.hpp"
#include "qgg/quaternion.hpp"

namespace qgg {

/// Unit quaternion per vertex; the data of a switching operation.
class SwitchingFunction {
public:
    explicit SwitchingFunction(std::vector<UnitQuaternion> values)
        : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("SwitchingFunction: must cover every vertex");
    }

    static SwitchingFunction identity(int n) {
        return SwitchingFunction(std::vector<UnitQuaternion>(n, UnitQuaternion::one()));
    }

    int size() const { return static_cast<int>(values_.size()); }
    const UnitQuaternion& at(int v) const { return values_.at(v); }

    /// Vertex-wise conjugate; switching by it undoes switching by *this.
    SwitchingFunction inverse() const {
        std::vector<UnitQuaternion> inv;
        inv.reserve(values_.size());
        for (const auto& q : values_) inv.push_back(q.conjugate());
        return SwitchingFunction(std::move(inv));
    }

private:
    std::vector<UnitQuaternion> values_;
};

struct Walk {
    std::vector<int> vertices;  // v0, v1, ..., vl; consecutive pairs adjacent
};

/// Quaternion unit gain graph: a simple graph plus a unit gain per oriented
/// edge with phi(u,v) = phi(v,u)*. Only the gain of the canonical orientation
/// (u < v) is stored; the reverse is always derived by conjugation, so the
/// symmetry cannot be violated by construction. Immutable after construction.
class GainGraph {
public:
    struct OrientedGain {
        int from;
        int to;
        UnitQuaternion gain;  // gain of the oriented edge (from, to)
    };

    GainGraph(int n, const std::vector<OrientedGain>& edge_gains);

    /// Gains listed in the canonical edge order of the topology.
    GainGraph(Graph graph, std::vector<UnitQuaternion> gains);

    const Graph& underlying() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    /// Gain of the oriented edge (u, v): the stored value when u < v, its
    /// conjugate otherwise. Throws when {u, v} is not an edge.
    UnitQuaternion gain_of(int u, int v) const;

    /// Stored (canonical-orientation) gain of edges()[idx].
    const UnitQuaternion& canonical_gain(int idx) const { return gains_.at(idx); }

    /// Hermitian adjacency matrix: gains in adjacent positions, zero
    /// elsewhere, zero diagonal.
    QMatrix adjacency_matrix() const;

    /// Gain graph with every edge gain transformed by
    /// phi(xy) -> theta(x)* phi(xy) theta(y); the topology is unchanged.
    GainGraph switched(const SwitchingFunction& theta) const;

    friend bool operator==(const GainGraph& a, const GainGraph& b) {
        return a.graph_ == b.graph_ && a.gains_ == b.gains_;
    }

private:
    Graph graph_;
    std::vector<UnitQuaternion> gains_;
};

/// Product of the edge gains along the walk, accumulated by multiplication
/// from the right in walk order (this matches right multiplication by the
/// adjacency matrix). Left accumulation would give a different, conjugate
/// related value: the factors do not commute. The empty walk has gain 1.
UnitQuaternion walk_gain(const GainGraph& g, const Walk& w);

/// Re of the gain of the closed walk around the cycle. Well defined: the
/// gain itself depends on starting point and direction, its real part does
/// not. The cycle is given as a vertex sequence without repeating the start.
Rational cycle_gain_real_part(const GainGraph& g, const std::vector<int>& cycle);

/// True iff the cycle gain is real (zero imaginary part); also independent
/// of starting point and direction.
bool cycle_gain_is_real(const GainGraph& g, const std::vector<int>& cycle);

/// Switches a connected gain graph so that every edge of the BFS spanning
/// tree (root 0, neighbors in ascending index order) has gain 1; non-tree
/// edges carry the residual gains. Returns the switched graph and the
/// switching function used. Throws on disconnected input.
std::pair<GainGraph, SwitchingFunction> normalize_to_spanning_tree(const GainGraph& g);

}  // namespace qgg
