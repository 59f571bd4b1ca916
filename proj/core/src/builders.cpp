#include "bootperc/builders.hpp"

#include <string>
#include <vector>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

Graph build_path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i + 1 < n) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph build_cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph build_complete(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph build_complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs both sides >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.emplace_back(u, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, edges);
}

Graph build_hypercube(std::size_t d) {
  require(d >= 1, "hypercube needs d >= 1");
  require(d <= 20, "hypercube dimension above 20 is not supported");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t bit = 0; bit < d; ++bit) {
      const Vertex v = u ^ (Vertex{1} << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph build_star(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph build_star_plus_edge(std::size_t n) {
  require(n >= 3, "star plus edge needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  edges.emplace_back(1, 2);
  return Graph::from_edges(n, edges);
}

Graph build_b_family(std::size_t m) {
  require(m >= 1, "B_m needs m >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto a = static_cast<Vertex>(6 + 2 * i);
    const auto b = static_cast<Vertex>(7 + 2 * i);
    edges.emplace_back(0, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, 3);
  }
  return Graph::from_edges(6 + 2 * (m - 1), edges);
}

Graph direct_product(const Graph& g, const Graph& h) {
  require(g.order() > 0 && h.order() > 0, "direct product needs nonempty factors");
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count() * h.edge_count());
  for (const auto& [g1, g2] : g.edges()) {
    for (const auto& [h1, h2] : h.edges()) {
      // {g1,g2} × {h1,h2} yields the two "crossing" pairs.
      edges.emplace_back(static_cast<Vertex>(g1 * nh + h1), static_cast<Vertex>(g2 * nh + h2));
      edges.emplace_back(static_cast<Vertex>(g1 * nh + h2), static_cast<Vertex>(g2 * nh + h1));
    }
  }
  std::vector<std::string> labels;
  labels.reserve(g.order() * nh);
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = 0; b < nh; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  }
  return Graph::from_edges(g.order() * nh, edges, std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (g.has_labels() || h.has_labels()) {
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    for (Vertex v = 0; v < h.order(); ++v) labels.push_back(h.label(v) + "'");
  }
  return Graph::from_edges(g.order() + h.order(), edges, std::move(labels));
}

}  // namespace bootperc
