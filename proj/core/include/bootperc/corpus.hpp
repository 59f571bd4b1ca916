#pragma once

#include <string>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Two triangles 0-1-2 and 3-4-5 joined by the edge 1-3.
Graph build_triangle_pair();
/// K_4 with the edge {2, 3} subdivided by vertex 4.
Graph build_subdivided_k4();
/// Wheel on n vertices: hub 0 joined to the cycle 1..n-1, n >= 4.
Graph build_wheel(std::size_t n);
Graph build_petersen();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small connected graphs used by the property suites.
const std::vector<NamedGraph>& corpus_graphs();

struct CorpusPair {
  std::string id;
  std::string g_name;
  std::string h_name;
  Graph g;
  Graph h;
  /// δ(G) >= r.
  int r = 2;
};

/// Fixed list of 30 (G, H, r) instances with connected H and δ(G) >= r.
const std::vector<CorpusPair>& corpus_pairs();

}  // namespace bootperc
