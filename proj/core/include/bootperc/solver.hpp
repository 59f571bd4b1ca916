#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bootperc/graph.hpp"

namespace bootperc {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class BoundOrigin { Trivial, ForcedCount, ComponentSum, Perimeter, Search };

std::string_view to_string(BoundOrigin origin);

struct LowerBound {
  std::size_t value = 0;
  BoundOrigin origin = BoundOrigin::Trivial;
};

/// Optional caller-supplied lower bound for one component of the input
/// graph. Must be sound: the solver starts its search at this size.
using ComponentBoundFn = std::function<std::optional<LowerBound>(const Graph& whole, const VertexSet& component)>;

struct SolveOptions {
  /// Maximum number of closure evaluations across all components.
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::chrono::milliseconds> time_limit;
  unsigned workers = 1;
  ComponentBoundFn component_bound;
};

enum class SolveStatus { Optimal, Inconclusive };

struct ComponentReport {
  VertexSet vertices;
  std::size_t forced = 0;
  LowerBound start_bound;
  /// Set once the component is solved.
  std::optional<std::size_t> value;
  /// Size of the best percolating set known for the component.
  std::size_t upper = 0;
  /// How optimality was established: Search when every smaller size was
  /// refuted by enumeration, otherwise the origin of the bound it meets.
  std::optional<BoundOrigin> certificate;
};

struct SolverReport {
  SolveStatus status = SolveStatus::Optimal;
  /// m(G, r); empty when the budget ran out.
  std::optional<std::size_t> value;
  /// Lexicographically smallest optimal set, or the best percolating set
  /// known when inconclusive.
  VertexSet witness;
  LowerBound lower_bound_used;
  std::size_t upper_bound = 0;
  /// No percolating set of size value - 1 exists (proved).
  bool exhaustive = false;
  std::uint64_t sets_examined = 0;
  std::chrono::nanoseconds wall_time{0};
  std::vector<ComponentReport> components;

  bool optimal() const { return status == SolveStatus::Optimal; }
};

/// Vertices of degree < r; they belong to every r-percolating set.
VertexSet forced_vertices(const Graph& g, int r);

/// Exact m(G, r) with a certified witness.
///
/// Components are solved independently. In each, sizes k are tried in
/// increasing order from the component's lower bound; supersets of the
/// forced vertices are enumerated in lexicographic order and a branch is cut
/// as soon as adding every remaining candidate still fails to percolate.
SolverReport min_percolating(const Graph& g, int r, const SolveOptions& options = {});

/// Forced vertices plus, repeatedly, the vertex whose addition grows the
/// closure most (ties to the smaller index). Always percolates.
VertexSet greedy_upper(const Graph& g, int r);

void to_json(nlohmann::json& j, const SolverReport& report);

}  // namespace bootperc
