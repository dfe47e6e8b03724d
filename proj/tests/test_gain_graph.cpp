#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgg/gain_graph.hpp"
#include "qgg/graph_metrics.hpp"
#include "qgg/rng.hpp"
#include "qgg/theorem.hpp"

using namespace qgg;

namespace {

std::vector<UnitQuaternion> random_gains(Rng& rng, int count) {
    std::vector<UnitQuaternion> gains;
    gains.reserve(count);
    for (int t = 0; t < count; ++t) gains.push_back(rng.mixed_unit());
    return gains;
}

SwitchingFunction random_theta(Rng& rng, int n) {
    return SwitchingFunction(random_gains(rng, n));
}

GainGraph random_gain_graph(Rng& rng, int n) {
    std::vector<GainGraph::OrientedGain> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(2)) edges.push_back({u, v, rng.mixed_unit()});
    if (edges.empty()) edges.push_back({0, 1, rng.mixed_unit()});
    return GainGraph(n, edges);
}

}  // namespace

TEST_CASE("gain_of derives the reverse orientation by conjugation") {
    GainGraph g(2, {{0, 1, UnitQuaternion(Quaternion::i())}});
    CHECK(g.gain_of(0, 1).value() == Quaternion::i());
    CHECK(g.gain_of(1, 0).value() == -Quaternion::i());
    CHECK_THROWS_AS(g.gain_of(0, 0), std::invalid_argument);

    // A gain given on the descending orientation lands conjugated in storage.
    GainGraph h(2, {{1, 0, UnitQuaternion(Quaternion::j())}});
    CHECK(h.gain_of(1, 0).value() == Quaternion::j());
    CHECK(h.gain_of(0, 1).value() == -Quaternion::j());

    Rng rng(21);
    GainGraph r = random_gain_graph(rng, 6);
    for (const Edge& e : r.underlying().edges())
        CHECK(r.gain_of(e.u, e.v) * r.gain_of(e.v, e.u) == UnitQuaternion::one());
}

TEST_CASE("graph construction rejects loops and parallel edges") {
    CHECK_THROWS_AS(GainGraph(3, {{0, 0, UnitQuaternion::one()}}), std::invalid_argument);
    CHECK_THROWS_AS(GainGraph(3, {{0, 1, UnitQuaternion::one()},
                                  {1, 0, UnitQuaternion::one()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(GainGraph(2, {{0, 3, UnitQuaternion::one()}}), std::out_of_range);
}

TEST_CASE("adjacency matrix") {
    GainGraph g(2, {{0, 1, UnitQuaternion(Quaternion::i())}});
    QMatrix a = g.adjacency_matrix();
    CHECK(a.at(0, 1) == Quaternion::i());
    CHECK(a.at(1, 0) == -Quaternion::i());
    CHECK(a.at(0, 0) == Quaternion::zero());

    GainGraph p3 = make_gain_path({UnitQuaternion::one(), UnitQuaternion::one()});
    QMatrix pa = p3.adjacency_matrix();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(pa.at(r, c) ==
                  (std::abs(r - c) == 1 ? Quaternion::one() : Quaternion::zero()));

    Rng rng(22);
    for (int t = 0; t < 40; ++t) {
        QMatrix m = random_gain_graph(rng, 2 + (int)rng.below(6)).adjacency_matrix();
        CHECK(is_hermitian(m));
        for (int v = 0; v < m.rows(); ++v) CHECK(m.at(v, v) == Quaternion::zero());
    }
}

TEST_CASE("switching") {
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + (int)rng.below(6);
        GainGraph g = random_gain_graph(rng, n);
        SwitchingFunction theta = random_theta(rng, n);
        GainGraph sw = g.switched(theta);

        CHECK(sw.underlying() == g.underlying());
        for (int idx = 0; idx < sw.edge_count(); ++idx)
            CHECK(sw.canonical_gain(idx).value().norm_squared() == Rational(1));

        // A(G^theta) = D* A D, exactly.
        std::vector<Quaternion> diag;
        for (int v = 0; v < n; ++v) diag.push_back(theta.at(v).value());
        QMatrix d = QMatrix::diagonal(diag);
        CHECK(sw.adjacency_matrix() == conjugate_transpose(d) * g.adjacency_matrix() * d);

        CHECK(rank_exact(sw.adjacency_matrix()).rank ==
              rank_exact(g.adjacency_matrix()).rank);
    }

    GainGraph g = random_gain_graph(rng, 5);
    CHECK(g.switched(SwitchingFunction::identity(5)) == g);
    CHECK_THROWS_AS(g.switched(SwitchingFunction::identity(4)), std::invalid_argument);
}

TEST_CASE("walk gain accumulates from the right") {
    Rng rng(24);
    GainGraph g = random_gain_graph(rng, 6);

    CHECK(walk_gain(g, Walk{{0}}) == UnitQuaternion::one());
    CHECK_THROWS_AS(walk_gain(g, Walk{{}}), std::invalid_argument);

    const Edge& e = g.underlying().edges()[0];
    CHECK(walk_gain(g, Walk{{e.u, e.v, e.u}}) == UnitQuaternion::one());

    // Explicit three-step product, in order.
    GainGraph path = make_gain_path(
        {UnitQuaternion(Quaternion::i()), UnitQuaternion(Quaternion::j()),
         UnitQuaternion(Quaternion::k())});
    CHECK(walk_gain(path, Walk{{0, 1, 2, 3}}).value() ==
          Quaternion::i() * Quaternion::j() * Quaternion::k());

    std::vector<int> bad{0, 1};
    if (!g.underlying().has_edge(0, 1)) CHECK_THROWS(walk_gain(g, Walk{bad}));
}

TEST_CASE("cycle gain real part is start and direction independent") {
    Rng rng(25);
    for (int t = 0; t < 50; ++t) {
        std::vector<UnitQuaternion> gains = random_gains(rng, 3 + (int)rng.below(5));
        GainGraph c = make_gain_cycle(gains);
        int n = c.vertex_count();
        std::vector<int> cyc(n);
        for (int v = 0; v < n; ++v) cyc[v] = v;

        Rational re = cycle_gain_real_part(c, cyc);
        bool real = cycle_gain_is_real(c, cyc);
        for (int rot = 0; rot < n; ++rot) {
            std::vector<int> rotated;
            for (int s = 0; s < n; ++s) rotated.push_back(cyc[(s + rot) % n]);
            CHECK(cycle_gain_real_part(c, rotated) == re);
            CHECK(cycle_gain_is_real(c, rotated) == real);
            std::reverse(rotated.begin(), rotated.end());
            CHECK(cycle_gain_real_part(c, rotated) == re);
            CHECK(cycle_gain_is_real(c, rotated) == real);
        }
    }
}

TEST_CASE("cycle gain pinned examples") {
    GainGraph c3 = make_gain_cycle(std::vector<UnitQuaternion>(3, UnitQuaternion::one()));
    CHECK(cycle_gain_real_part(c3, {0, 1, 2}) == Rational(1));
    CHECK_THROWS_AS(cycle_gain_real_part(c3, {0, 1}), std::invalid_argument);

    GainGraph c4 = make_gain_cycle({UnitQuaternion::one(), UnitQuaternion::one(),
                                    UnitQuaternion::one(), -UnitQuaternion::one()});
    CHECK(cycle_gain_is_real(c4, {0, 1, 2, 3}));
    CHECK(cycle_gain_real_part(c4, {0, 1, 2, 3}) == Rational(-1));

    GainGraph c3i = make_gain_cycle({UnitQuaternion::one(), UnitQuaternion::one(),
                                     UnitQuaternion(Quaternion::i())});
    CHECK(!cycle_gain_is_real(c3i, {0, 1, 2}));
}

TEST_CASE("normalize to spanning tree") {
    Rng rng(26);

    // A gain tree normalizes to all-ones gains.
    std::vector<GainGraph::OrientedGain> tree_edges;
    for (int v = 1; v < 7; ++v)
        tree_edges.push_back({(int)rng.below(v), v, rng.mixed_unit()});
    GainGraph tree(7, tree_edges);
    auto [ntree, theta_tree] = normalize_to_spanning_tree(tree);
    for (int idx = 0; idx < ntree.edge_count(); ++idx)
        CHECK(ntree.canonical_gain(idx) == UnitQuaternion::one());

    // A cycle keeps exactly one possibly non-one edge, carrying the walk gain
    // from the BFS root up to the stored orientation.
    std::vector<UnitQuaternion> gains = random_gains(rng, 5);
    GainGraph cycle = make_gain_cycle(gains);
    auto [ncycle, theta_cycle] = normalize_to_spanning_tree(cycle);
    int non_one = 0;
    for (int idx = 0; idx < ncycle.edge_count(); ++idx)
        if (ncycle.canonical_gain(idx) != UnitQuaternion::one()) ++non_one;
    CHECK(non_one <= 1);
    std::vector<int> around{0, 1, 2, 3, 4};
    UnitQuaternion before = walk_gain(cycle, Walk{{0, 1, 2, 3, 4, 0}});
    UnitQuaternion after = walk_gain(ncycle, Walk{{0, 1, 2, 3, 4, 0}});
    CHECK(cycle_gain_real_part(cycle, around) == cycle_gain_real_part(ncycle, around));
    CHECK(theta_cycle.at(0) == UnitQuaternion::one());
    CHECK(after == before);  // theta is 1 at the root, closed walks there keep their gain

    // A normalized C_4 walked from the root yields the hand-multiplied
    // product of the original four gains.
    std::vector<UnitQuaternion> g4 = random_gains(rng, 4);
    Quaternion by_hand =
        g4[0].value() * g4[1].value() * g4[2].value() * g4[3].value();
    auto [nc4, theta4] = normalize_to_spanning_tree(make_gain_cycle(g4));
    CHECK(walk_gain(nc4, Walk{{0, 1, 2, 3, 0}}).value() == by_hand);

    // Already normalized input is unchanged under the identity switching.
    auto [renorm, theta_again] = normalize_to_spanning_tree(ncycle);
    CHECK(renorm == ncycle);
    for (int v = 0; v < 5; ++v) CHECK(theta_again.at(v) == UnitQuaternion::one());

    // Recovering the original graph via the inverse switching function.
    for (int t = 0; t < 30; ++t) {
        GainGraph g = random_gain_graph(rng, 2 + (int)rng.below(6));
        if (!is_connected(g.underlying())) continue;
        auto [normalized, theta] = normalize_to_spanning_tree(g);
        CHECK(normalized.switched(theta.inverse()) == g);
        CHECK(g.switched(theta) == normalized);
    }

    GainGraph disconnected(4, {{0, 1, UnitQuaternion::one()},
                               {2, 3, UnitQuaternion::one()}});
    CHECK_THROWS_AS(normalize_to_spanning_tree(disconnected), std::invalid_argument);
}
