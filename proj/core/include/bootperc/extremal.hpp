#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bootperc/graph.hpp"
#include "bootperc/solver.hpp"

namespace bootperc {

/// Both sides of the extremal characterization for G × K_2 at r = 2:
/// m(G × K_2, 2) = |V(G)| exactly when G is an odd cycle of length >= 3 or
/// G is bipartite with m(G, 2) = |V(G)| / 2.
struct ExtremalVerdict {
  std::size_t order = 0;
  std::size_t product_value = 0;
  bool odd_cycle = false;
  bool bipartite = false;
  /// m(G, 2), computed only for bipartite G.
  std::optional<std::size_t> base_value;
  bool lhs = false;
  bool rhs = false;

  bool counterexample() const { return lhs != rhs; }
};

/// Throws PreconditionError for disconnected G or δ(G) < 2, and Error when
/// the solver budget runs out.
ExtremalVerdict check_extremal_characterization(const Graph& g, const SolveOptions& options = {});

void to_json(nlohmann::json& j, const ExtremalVerdict& verdict);

/// Calls `visit` for every labelled graph on n vertices (all subsets of the
/// n(n-1)/2 possible edges, in increasing bitmask order) that is connected
/// and has minimum degree >= min_degree. n <= 7.
void for_each_labeled_graph(std::size_t n, std::size_t min_degree,
                            const std::function<void(const Graph&)>& visit);

/// Colour-refinement (1-WL) fingerprint; equal for isomorphic graphs.
std::string refinement_signature(const Graph& g);

struct ExtremalCandidate {
  Graph graph;
  /// Percolating set of size |V| / 2.
  VertexSet witness;
  /// refinement_signature plus the solver value.
  std::string signature;
  /// Labelled graphs that shared this signature.
  std::size_t labeled_count = 0;
};

inline constexpr std::size_t kMaxExtremalOrder = 8;

/// Connected bipartite graphs with δ >= 2 on at most n_max vertices with
/// m(G, 2) = |V(G)| / 2, one representative per signature. Graphs are
/// enumerated per bipartition layout a + b = n, a <= b, with the first a
/// vertices on one side. Throws PreconditionError when n_max exceeds
/// kMaxExtremalOrder.
std::vector<ExtremalCandidate> enumerate_extremal_bipartite(std::size_t n_max);

}  // namespace bootperc
