#include "bootperc/graph.hpp"

#include "bootperc/errors.hpp"

namespace bootperc {

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order) {
    throw PreconditionError("label count " + std::to_string(labels.size()) + " does not match order " +
                            std::to_string(order));
  }
  Graph g;
  g.adjacency_.assign(order, VertexSet(order));
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range for order " + std::to_string(order));
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (g.adjacency_[u].contains(v)) {
      throw PreconditionError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.adjacency_[u].insert(v);
    g.adjacency_[v].insert(u);
    ++g.edge_count_;
  }
  g.offsets_.assign(order + 1, 0);
  g.lists_.reserve(2 * g.edge_count_);
  for (std::size_t v = 0; v < order; ++v) {
    g.adjacency_[v].for_each([&](Vertex u) { g.lists_.push_back(u); });
    g.offsets_[v + 1] = g.lists_.size();
  }
  g.labels_ = std::move(labels);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbor_list(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v >= order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  const auto e = edges();
  return from_edges(order(), e, std::move(labels));
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* origin) const {
  if (keep.width() != order()) throw WidthMismatch(order(), keep.width());
  std::vector<Vertex> old_of = keep.members();
  std::vector<Vertex> new_of(order(), 0);
  for (std::size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = static_cast<Vertex>(i);
  std::vector<Edge> sub;
  std::vector<std::string> sub_labels;
  for (Vertex u : old_of) {
    for (Vertex v : neighbor_list(u)) {
      if (u < v && keep.contains(v)) sub.emplace_back(new_of[u], new_of[v]);
    }
    if (has_labels()) sub_labels.push_back(labels_[u]);
  }
  if (origin != nullptr) *origin = old_of;
  return from_edges(old_of.size(), sub, std::move(sub_labels));
}

}  // namespace bootperc
