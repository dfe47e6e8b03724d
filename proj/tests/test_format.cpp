#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qgg/qgg_format.hpp"
#include "qgg/rng.hpp"
#include "qgg/theorem.hpp"

using namespace qgg;

namespace {

int error_line(const std::string& text, bool lenient = false) {
    try {
        parse_qgg_string(text, lenient);
    } catch (const ParseError& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("parse a canonical file") {
    std::string text =
        "qgg 1\n"
        "# a triangle with one gain i\n"
        "n 3\n"
        "e 0 1 1 0 0 0\n"
        "e 0 2 1/2 1/2 1/2 -1/2\n"
        "e 1 2 0 1 0 0\n";
    ParsedQgg parsed = parse_qgg_string(text);
    CHECK(parsed.exact);
    CHECK(parsed.graph.vertex_count() == 3);
    CHECK(parsed.graph.edge_count() == 3);
    CHECK(parsed.graph.gain_of(0, 2).value() ==
          Quaternion(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)));
    CHECK(parsed.graph.gain_of(2, 1).value() == -Quaternion::i());
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(51);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + (int)rng.below(6);
        std::vector<GainGraph::OrientedGain> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2)) edges.push_back({u, v, rng.mixed_unit()});
        if (edges.empty()) edges.push_back({0, 1, rng.mixed_unit()});
        GainGraph g(n, edges);

        std::string text = serialize_qgg(g);
        ParsedQgg parsed = parse_qgg_string(text);
        CHECK(parsed.exact);
        CHECK(parsed.graph == g);
        CHECK(serialize_qgg(parsed.graph) == text);
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(error_line("qgg 2\n") == 1);
    CHECK(error_line("n 3\n") == 1);
    CHECK(error_line("qgg 1\nn 0\n") == 2);
    CHECK(error_line("qgg 1\nn two\n") == 2);
    CHECK(error_line("qgg 1\nn 3\ne 1 0 1 0 0 0\n") == 3);       // u >= v
    CHECK(error_line("qgg 1\nn 3\ne 0 3 1 0 0 0\n") == 3);       // out of range
    CHECK(error_line("qgg 1\nn 3\ne 0 1 1 0 0\n") == 3);         // missing coefficient
    CHECK(error_line("qgg 1\nn 3\ne 0 1 1 0 0 q\n") == 3);       // malformed
    CHECK(error_line("qgg 1\nn 3\ne 0 1 1 1 0 0\n") == 3);       // not unit
    CHECK(error_line("qgg 1\nn 3\ne 0 1 1 0 0 0\ne 0 1 1 0 0 0\n") == 4);  // duplicate
    CHECK(error_line("qgg 1\n") == 2);                           // missing n
    CHECK(error_line("") == 1);                                  // missing header
    CHECK(error_line("qgg 1\nn 3\nx 0 1\n") == 3);               // unknown line
}

TEST_CASE("lenient decimals") {
    std::string text =
        "qgg 1\n"
        "n 2\n"
        "e 0 1 0.6 0.8 0 0\n";
    CHECK(error_line(text, false) == 3);

    ParsedQgg parsed = parse_qgg_string(text, true);
    CHECK(!parsed.exact);
    CHECK(parsed.graph.gain_of(0, 1).value() ==
          Quaternion(Rational(3, 5), Rational(4, 5), 0, 0));

    // Off-unit beyond the tolerance is rejected, not re-normalized.
    CHECK(error_line("qgg 1\nn 2\ne 0 1 0.6 0.80001 0 0\n", true) == 3);

    // Exact fractions stay exact under --lenient.
    ParsedQgg frac = parse_qgg_string("qgg 1\nn 2\ne 0 1 3/5 4/5 0 0\n", true);
    CHECK(frac.exact);
}

TEST_CASE("theta files") {
    std::istringstream good(
        "# theta\n"
        "0 1 0 0 0\n"
        "2 0 0 0 -1\n"
        "1 3/5 4/5 0 0\n");
    SwitchingFunction theta = parse_theta(good, 3);
    CHECK(theta.at(0) == UnitQuaternion::one());
    CHECK(theta.at(1).value() == Quaternion(Rational(3, 5), Rational(4, 5), 0, 0));
    CHECK(theta.at(2).value() == -Quaternion::k());

    std::string rendered = serialize_theta(theta);
    std::istringstream again(rendered);
    SwitchingFunction back = parse_theta(again, 3);
    for (int v = 0; v < 3; ++v) CHECK(back.at(v) == theta.at(v));

    std::istringstream missing("0 1 0 0 0\n");
    CHECK_THROWS_AS(parse_theta(missing, 2), ParseError);
    std::istringstream dup("0 1 0 0 0\n0 1 0 0 0\n");
    CHECK_THROWS_AS(parse_theta(dup, 1), ParseError);
    std::istringstream off_unit("0 2 0 0 0\n");
    CHECK_THROWS_AS(parse_theta(off_unit, 1), ParseError);
}

TEST_CASE("empty edge set still parses") {
    ParsedQgg parsed = parse_qgg_string("qgg 1\nn 4\n");
    CHECK(parsed.graph.vertex_count() == 4);
    CHECK(parsed.graph.edge_count() == 0);
    CHECK(rank_exact(parsed.graph.adjacency_matrix()).rank == 0);
}
