#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bootperc/vertex_set.hpp"

namespace bootperc {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple graph.
///
/// Adjacency is held twice: as one VertexSet per vertex (for set algebra) and
/// as sorted neighbor lists (for the percolation inner loop). Vertices are
/// 0-indexed. Labels are optional opaque tags, e.g. "(3,2)" for a product
/// vertex; they never take part in equality.
class Graph {
 public:
  Graph() = default;

  /// Validates every edge: endpoints in range, no self-loops, no duplicates.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});
  static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::span<const Vertex> neighbor_list(Vertex v) const {
    return {lists_.data() + offsets_.at(v), offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_.at(v + 1) - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).contains(v); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// The vertex's label, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet all() const { return VertexSet::full(order()); }

  /// Subgraph induced by `keep`, with vertices renumbered in increasing order.
  /// `origin[i]` is the original index of new vertex i.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* origin = nullptr) const;

  /// Structural equality: same order and same adjacency.
  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> lists_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

}  // namespace bootperc
