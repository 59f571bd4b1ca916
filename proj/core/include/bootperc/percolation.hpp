#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Scratch state for repeated r-neighbor closures on one graph.
///
/// Keeps a per-vertex count of infected neighbors and a work queue, so one
/// closure costs O(|A0| + Σ deg over infected vertices). A workspace is not
/// shared between threads; create one per worker.
class PercolationWorkspace {
 public:
  PercolationWorkspace(const Graph& g, int r);

  /// Runs to the fixpoint from `seeds` and returns the number of infected vertices.
  std::size_t run(const VertexSet& seeds);
  /// Same, from raw bitset words of width g.order().
  std::size_t run_words(std::span<const std::uint64_t> seeds);

  std::size_t infected_count() const { return infected_count_; }
  bool all_infected() const { return infected_count_ == g_->order(); }
  VertexSet infected() const;

  const Graph& graph() const { return *g_; }
  int threshold() const { return r_; }

 private:
  void reset();
  void infect(Vertex v);
  void drain();

  const Graph* g_;
  int r_;
  std::vector<std::uint32_t> count_;
  std::vector<std::uint8_t> infected_;
  std::vector<Vertex> queue_;
  std::size_t infected_count_ = 0;
};

/// ∪_t A_t for the r-neighbor update rule started at `seeds`.
/// Throws PreconditionError when r < 1 and WidthMismatch on a foreign set.
VertexSet closure(const Graph& g, int r, const VertexSet& seeds);

/// closure(g, r, seeds) = V(G) with seeds nonempty.
bool propagates(const Graph& g, int r, const VertexSet& seeds);

/// Reference closure: recomputes |N(v) ∩ A_{t-1}| for every vertex each round.
/// Quadratic; used to cross-check the counter-based engine.
VertexSet closure_naive(const Graph& g, int r, const VertexSet& seeds);

/// The round-by-round sequence A_0 ⊊ A_1 ⊊ ... ⊊ A_T, with A_T the fixpoint.
struct PercolationTrace {
  int r = 0;
  std::vector<VertexSet> rounds;
  /// newly_infected[t - 1] = A_t \ A_{t-1} for t = 1..T.
  std::vector<VertexSet> newly_infected;

  /// T, the index of the first fixpoint round.
  std::size_t final_round() const { return rounds.empty() ? 0 : rounds.size() - 1; }
  const VertexSet& final_set() const { return rounds.back(); }
};

PercolationTrace trace(const Graph& g, int r, const VertexSet& seeds);

void to_json(nlohmann::json& j, const VertexSet& s);
void to_json(nlohmann::json& j, const PercolationTrace& t);

}  // namespace bootperc
