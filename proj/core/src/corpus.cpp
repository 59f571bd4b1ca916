#include "bootperc/corpus.hpp"

#include <tuple>

#include "bootperc/builders.hpp"
#include "bootperc/errors.hpp"

namespace bootperc {

Graph build_triangle_pair() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {1, 3}});
}

Graph build_subdivided_k4() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
}

Graph build_wheel(std::size_t n) {
  if (n < 4) throw PreconditionError("wheel needs n >= 4");
  std::vector<Edge> edges;
  const auto rim = static_cast<Vertex>(n - 1);
  for (Vertex i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i == rim ? 1 : i + 1);
  }
  return Graph::from_edges(n, edges);
}

Graph build_petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

const std::vector<NamedGraph>& corpus_graphs() {
  static const std::vector<NamedGraph> graphs{
      {"P3", build_path(3)},
      {"P4", build_path(4)},
      {"P5", build_path(5)},
      {"K2", build_complete(2)},
      {"K3", build_complete(3)},
      {"K4", build_complete(4)},
      {"K5", build_complete(5)},
      {"C4", build_cycle(4)},
      {"C5", build_cycle(5)},
      {"C6", build_cycle(6)},
      {"C7", build_cycle(7)},
      {"K2,3", build_complete_bipartite(2, 3)},
      {"K3,3", build_complete_bipartite(3, 3)},
      {"K4,4", build_complete_bipartite(4, 4)},
      {"Q3", build_hypercube(3)},
      {"star5", build_star(5)},
      {"star5+e", build_star_plus_edge(5)},
      {"B2", build_b_family(2)},
      {"B3", build_b_family(3)},
      {"triangle-pair", build_triangle_pair()},
      {"subdivided-K4", build_subdivided_k4()},
      {"W6", build_wheel(6)},
      {"petersen", build_petersen()},
  };
  return graphs;
}

namespace {

const Graph& named(const std::string& name) {
  for (const auto& entry : corpus_graphs()) {
    if (entry.name == name) return entry.graph;
  }
  throw PreconditionError("no corpus graph named " + name);
}

}  // namespace

const std::vector<CorpusPair>& corpus_pairs() {
  static const std::vector<CorpusPair> pairs = [] {
    const std::vector<std::tuple<std::string, std::string, int>> table{
        {"C5", "P4", 2},         {"C5", "P3", 2},           {"C5", "K2", 2},
        {"C6", "P3", 2},         {"C7", "K2", 2},           {"K4", "P3", 2},
        {"K4", "K2", 2},         {"K4", "K3", 2},           {"K4", "P4", 3},
        {"K5", "K2", 3},         {"K5", "P3", 3},           {"K5", "P4", 4},
        {"K3,3", "K2", 2},       {"K3,3", "K2", 3},         {"K3,3", "P3", 3},
        {"K4,4", "K2", 4},       {"Q3", "K2", 3},           {"Q3", "P3", 2},
        {"petersen", "K2", 3},   {"petersen", "K2", 2},     {"triangle-pair", "K2", 2},
        {"triangle-pair", "P3", 2}, {"subdivided-K4", "P3", 2}, {"subdivided-K4", "K2", 2},
        {"B2", "K2", 2},         {"B3", "K2", 2},           {"K2,3", "P4", 2},
        {"W6", "K2", 3},         {"K3", "P4", 2},           {"C4", "C5", 2},
    };
    std::vector<CorpusPair> out;
    for (const auto& [g, h, r] : table) {
      out.push_back({g + " x " + h + " @" + std::to_string(r), g, h, named(g), named(h), r});
    }
    return out;
  }();
  return pairs;
}

}  // namespace bootperc
