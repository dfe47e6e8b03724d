#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qgg/gain_graph.hpp"

namespace qgg {

/// Parse failure with a 1-based line number; what() carries both.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
};

/// The qgg v1 text format:
///
///   qgg 1
///   # comment lines start with '#'
///   n <N>
///   e <u> <v> <a0> <a1> <a2> <a3>
///
/// Vertex indices are 0-based with u < v; each coefficient is an integer or
/// "p/q". Gains must be exactly unit. With lenient = true coefficients may
/// also be decimal literals, checked against | |q| - 1 | <= 1e-12 and never
/// re-normalized; such gains are exact decimal values but the file is marked
/// inexact and only the adjoint rank path accepts it.
struct ParsedQgg {
    GainGraph graph;
    /// False when any coefficient was written as a decimal.
    bool exact;
};

constexpr double kLenientUnitTolerance = 1e-12;

ParsedQgg parse_qgg(std::istream& in, bool lenient = false);
ParsedQgg parse_qgg_string(const std::string& text, bool lenient = false);

/// Canonical serialization: header, vertex count, one edge line per edge in
/// canonical (sorted, u < v) order. Parsing its output reproduces the graph
/// byte for byte.
std::string serialize_qgg(const GainGraph& g);

/// Switching function file: one line "<v> <a0> <a1> <a2> <a3>" per vertex,
/// '#' comments allowed; every vertex of the graph must appear exactly once
/// and every value must be exactly unit.
SwitchingFunction parse_theta(std::istream& in, int vertex_count);

std::string serialize_theta(const SwitchingFunction& theta);

}  // namespace qgg
