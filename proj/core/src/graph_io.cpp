#include "bootperc/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::vector<VertexSet> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tokens = split_ws(line);
    if (!order) {
      if (tokens.size() != 1) throw ParseError("first line must hold only the vertex count", line_no);
      order = parse_index(tokens[0], line_no);
      seen.assign(*order, VertexSet(*order));
      continue;
    }
    if (tokens.size() != 2) throw ParseError("edge line must hold exactly two vertices", line_no);
    const std::size_t u = parse_index(tokens[0], line_no);
    const std::size_t v = parse_index(tokens[1], line_no);
    if (u >= *order || v >= *order) {
      throw ParseError("vertex " + std::to_string(u >= *order ? u : v) + " out of range (order " +
                           std::to_string(*order) + ")",
                       line_no);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (seen[u].contains(static_cast<Vertex>(v))) {
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    }
    seen[u].insert(static_cast<Vertex>(v));
    seen[v].insert(static_cast<Vertex>(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!order) throw ParseError("missing vertex count", line_no == 0 ? 1 : line_no);
  return Graph::from_edges(*order, edges);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string export_dot(const Graph& g, const VertexSet& highlight, std::string_view name) {
  if (highlight.width() != g.order()) throw WidthMismatch(g.order(), highlight.width());
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v) << "\"";
    if (highlight.contains(v)) out << ", style=filled, fillcolor=black, fontcolor=white";
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bootperc
