#pragma once

#include <cstddef>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

/// δ(G); 0 for the empty graph.
std::size_t min_degree(const Graph& g);
/// Δ(G); 0 for the empty graph.
std::size_t max_degree(const Graph& g);

/// Components in order of their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct BipartiteResult {
  bool bipartite = true;
  /// Side (0 or 1) per vertex when bipartite.
  std::vector<int> coloring;
  /// Vertices of an odd cycle, in cycle order, when not bipartite.
  std::vector<Vertex> odd_cycle;
};

BipartiteResult is_bipartite(const Graph& g);

struct OddCycleResult {
  bool found = false;
  std::vector<Vertex> cycle;
};

OddCycleResult contains_odd_cycle(const Graph& g);

/// Connected, 2-regular and of odd order, i.e. isomorphic to some C_{2k+1}.
bool is_odd_cycle_graph(const Graph& g);

}  // namespace bootperc
