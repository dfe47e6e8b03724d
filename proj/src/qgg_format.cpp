#include "qgg/qgg_format.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace qgg {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) fields.push_back(f);
    return fields;
}

struct CoefficientParse {
    Rational value;
    bool was_decimal = false;
};

CoefficientParse parse_coefficient(const std::string& text, bool lenient, int line) {
    if (auto r = Rational::parse(text)) return {*r, false};
    if (lenient) {
        if (auto r = Rational::parse_decimal(text)) return {*r, true};
        throw ParseError(line, "malformed coefficient '" + text + "'");
    }
    if (text.find('.') != std::string::npos)
        throw ParseError(line, "decimal coefficient '" + text +
                                   "' requires --lenient; strict files take integers or p/q");
    throw ParseError(line, "malformed coefficient '" + text + "'");
}

std::optional<int> parse_nonneg_int(const std::string& text) {
    if (text.empty() || text.size() > 9) return std::nullopt;
    int v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

ParsedQgg parse_qgg(std::istream& in, bool lenient) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    int n = -1;
    bool any_decimal = false;
    std::vector<GainGraph::OrientedGain> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto fields = split_fields(line);

        if (!header_seen) {
            if (fields.size() != 2 || fields[0] != "qgg" || fields[1] != "1")
                throw ParseError(line_no, "expected header 'qgg 1'");
            header_seen = true;
            continue;
        }
        if (n < 0) {
            if (fields.size() != 2 || fields[0] != "n")
                throw ParseError(line_no, "expected vertex count line 'n <N>'");
            auto count = parse_nonneg_int(fields[1]);
            if (!count || *count < 1)
                throw ParseError(line_no, "vertex count must be a positive integer");
            n = *count;
            continue;
        }
        if (fields[0] != "e")
            throw ParseError(line_no, "expected edge line 'e <u> <v> <a0> <a1> <a2> <a3>'");
        if (fields.size() != 7)
            throw ParseError(line_no, "edge line needs 2 vertices and 4 coefficients");
        auto u = parse_nonneg_int(fields[1]);
        auto v = parse_nonneg_int(fields[2]);
        if (!u || !v) throw ParseError(line_no, "malformed vertex index");
        if (*u >= *v) throw ParseError(line_no, "edges must satisfy u < v");
        if (*v >= n) throw ParseError(line_no, "vertex index out of range");

        bool gain_decimal = false;
        std::array<Rational, 4> coef;
        for (int k = 0; k < 4; ++k) {
            auto c = parse_coefficient(fields[3 + k], lenient, line_no);
            coef[k] = c.value;
            gain_decimal = gain_decimal || c.was_decimal;
        }
        Quaternion q(coef[0], coef[1], coef[2], coef[3]);
        if (gain_decimal) {
            // Lenient gains are taken as written, never re-normalized.
            double modulus = std::sqrt(q.norm_squared().to_double());
            if (std::fabs(modulus - 1.0) > kLenientUnitTolerance)
                throw ParseError(line_no, "gain is off-unit beyond the lenient tolerance");
            any_decimal = true;
        } else if (!q.is_unit()) {
            throw ParseError(line_no, "gain is not exactly unit (|q|^2 != 1)");
        }
        for (const auto& e : edges)
            if (e.from == *u && e.to == *v)
                throw ParseError(line_no, "duplicate edge");
        edges.push_back({*u, *v, UnitQuaternion::unchecked(q)});
    }

    if (!header_seen) throw ParseError(line_no + 1, "missing header 'qgg 1'");
    if (n < 0) throw ParseError(line_no + 1, "missing vertex count line");
    return {GainGraph(n, edges), !any_decimal};
}

ParsedQgg parse_qgg_string(const std::string& text, bool lenient) {
    std::istringstream in(text);
    return parse_qgg(in, lenient);
}

std::string serialize_qgg(const GainGraph& g) {
    std::ostringstream os;
    os << "qgg 1\n";
    os << "n " << g.vertex_count() << "\n";
    for (int idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e = g.underlying().edges()[idx];
        os << "e " << e.u << " " << e.v << " " << g.canonical_gain(idx).value().str()
           << "\n";
    }
    return os.str();
}

SwitchingFunction parse_theta(std::istream& in, int vertex_count) {
    std::vector<std::optional<UnitQuaternion>> values(vertex_count);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        auto fields = split_fields(line);
        if (fields.size() != 5)
            throw ParseError(line_no, "expected '<v> <a0> <a1> <a2> <a3>'");
        auto v = parse_nonneg_int(fields[0]);
        if (!v || *v >= vertex_count)
            throw ParseError(line_no, "vertex index out of range");
        if (values[*v]) throw ParseError(line_no, "duplicate vertex");
        std::array<Rational, 4> coef;
        for (int k = 0; k < 4; ++k) {
            auto r = Rational::parse(fields[1 + k]);
            if (!r) throw ParseError(line_no, "malformed coefficient");
            coef[k] = *r;
        }
        Quaternion q(coef[0], coef[1], coef[2], coef[3]);
        if (!q.is_unit())
            throw ParseError(line_no, "switching value is not exactly unit");
        values[*v] = UnitQuaternion::unchecked(q);
    }
    std::vector<UnitQuaternion> out;
    out.reserve(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        if (!values[v])
            throw ParseError(line_no + 1,
                             "switching function must cover vertex " + std::to_string(v));
        out.push_back(*values[v]);
    }
    return SwitchingFunction(std::move(out));
}

std::string serialize_theta(const SwitchingFunction& theta) {
    std::ostringstream os;
    for (int v = 0; v < theta.size(); ++v)
        os << v << " " << theta.at(v).value().str() << "\n";
    return os.str();
}

}  // namespace qgg
