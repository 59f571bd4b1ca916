#pragma once

#include <string>
#include <string_view>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Parses the edge-list format: a first line holding the order n, then one
/// "u v" edge per line (0-indexed). Text after '#' is a comment; blank lines
/// are skipped. Errors carry the 1-based line number.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph: order line, then edges sorted with u < v.
std::string write_graph(const Graph& g);

/// DOT text; highlighted vertices are drawn filled black.
std::string export_dot(const Graph& g, const VertexSet& highlight, std::string_view name = "G");

}  // namespace bootperc
