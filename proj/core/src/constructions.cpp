#include "bootperc/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bootperc/analysis.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

namespace {

void require(bool ok, const std::string& condition) {
  if (!ok) throw HypothesisError(condition);
}

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) {
    throw PreconditionError(std::string(what) + " " + std::to_string(v) + " out of range (order " +
                            std::to_string(g.order()) + ")");
  }
}

VertexSet verified(const Graph& g, const Graph& h, VertexSet seeds, int r, const char* name) {
  if (!propagates(direct_product(g, h), r, seeds)) {
    throw ConstructionError(std::string(name) + ": constructed set " + seeds.to_string() +
                            " does not percolate");
  }
  return seeds;
}

/// The two adjacent H-vertices playing the roles of layers 1 and 2.
std::pair<Vertex, Vertex> first_edge(const Graph& h) {
  for (Vertex x = 0; x < h.order(); ++x) {
    if (h.degree(x) > 0) return {x, h.neighbor_list(x).front()};
  }
  throw HypothesisError("H has no edge");
}

/// Seeds in G × H built layer-by-layer over the two H-vertices x and y.
class TwoLayerSeeds {
 public:
  TwoLayerSeeds(const Graph& g, const Graph& h, Vertex x, Vertex y) : h_(h), x_(x), y_(y), set_(g.order() * h.order()) {}

  void first(Vertex v) { set_.insert(product_index(h_, v, x_)); }
  void both(Vertex v) {
    set_.insert(product_index(h_, v, x_));
    set_.insert(product_index(h_, v, y_));
  }
  const VertexSet& set() const { return set_; }

 private:
  const Graph& h_;
  Vertex x_;
  Vertex y_;
  VertexSet set_;
};

/// Grows `covered` to V(G) by maximal paths hanging off it, seeding every
/// second path vertex in both layers. An odd path costs one vertex less than
/// its length.
void absorb_paths(const Graph& g, VertexSet& covered, TwoLayerSeeds& seeds) {
  while (!covered.is_full()) {
    std::vector<Vertex> path;
    VertexSet on_path(g.order());
    for (Vertex u = 0; u < g.order() && path.empty(); ++u) {
      if (!covered.contains(u) && g.neighbors(u).intersects(covered)) path.push_back(u);
    }
    if (path.empty()) throw HypothesisError("G is not connected");
    on_path.insert(path.front());
    for (;;) {
      bool extended = false;
      for (Vertex w : g.neighbor_list(path.back())) {
        if (!covered.contains(w) && !on_path.contains(w)) {
          path.push_back(w);
          on_path.insert(w);
          extended = true;
          break;
        }
      }
      if (!extended) break;
    }
    // Odd positions: v2, v4, ... (1-based). For odd length the last vertex is skipped.
    for (std::size_t i = 1; i < path.size(); i += 2) seeds.both(path[i]);
    covered |= on_path;
  }
}

/// A path P whose induced subgraph has minimum degree >= 2 and is not a
/// cycle, oriented so that its first vertex has degree > 2 in G[V(P)] or is
/// not adjacent to the last one. Depth-first over simple paths in vertex order.
class CorePathSearch {
 public:
  explicit CorePathSearch(const Graph& g) : g_(g), on_path_(g.order()) {}

  std::optional<std::vector<Vertex>> find() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_ = {s};
      on_path_.clear();
      on_path_.insert(s);
      if (extend()) return path_;
    }
    return std::nullopt;
  }

 private:
  bool acceptable() {
    if (path_.size() < 3) return false;
    bool branching = false;
    for (Vertex v : path_) {
      const std::size_t d = (g_.neighbors(v) & on_path_).size();
      if (d < 2) return false;
      branching = branching || d > 2;
    }
    if (!branching) return false;
    auto good_start = [&](Vertex first, Vertex last) {
      const std::size_t d = (g_.neighbors(first) & on_path_).size();
      return d > 2 || !g_.adjacent(first, last);
    };
    if (good_start(path_.front(), path_.back())) return true;
    if (good_start(path_.back(), path_.front())) {
      std::reverse(path_.begin(), path_.end());
      return true;
    }
    return false;
  }

  bool extend() {
    if (acceptable()) return true;
    for (Vertex w : g_.neighbor_list(path_.back())) {
      if (on_path_.contains(w)) continue;
      path_.push_back(w);
      on_path_.insert(w);
      if (extend()) return true;
      on_path_.erase(w);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
};

}  // namespace

VertexSet layer_set(const Graph& g, const Graph& h, Vertex layer) {
  check_vertex(h, layer, "layer vertex");
  VertexSet out(g.order() * h.order());
  for (Vertex v = 0; v < g.order(); ++v) out.insert(product_index(h, v, layer));
  return out;
}

VertexSet double_layer_set(const Graph& g, const Graph& h, const VertexSet& seeds_in_g, Vertex h1, Vertex h2,
                           int r) {
  check_vertex(h, h1, "layer vertex");
  check_vertex(h, h2, "layer vertex");
  if (seeds_in_g.width() != g.order()) throw WidthMismatch(g.order(), seeds_in_g.width());
  require(h.adjacent(h1, h2), "vertices " + std::to_string(h1) + " and " + std::to_string(h2) +
                                  " are not adjacent in H");
  require(min_degree(g) >= static_cast<std::size_t>(r), "delta(G) >= r");
  require(is_connected(h), "H is connected");
  require(propagates(g, r, seeds_in_g), "S percolates in G at r = " + std::to_string(r));
  VertexSet out(g.order() * h.order());
  seeds_in_g.for_each([&](Vertex v) {
    out.insert(product_index(h, v, h1));
    out.insert(product_index(h, v, h2));
  });
  return verified(g, h, std::move(out), r, "double layer");
}

std::optional<Vertex> find_puncture_vertex(const Graph& g, int r) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t heavy = 0;
    for (Vertex u : g.neighbor_list(v)) heavy += g.degree(u) > static_cast<std::size_t>(r) ? 1 : 0;
    if (heavy >= static_cast<std::size_t>(r)) return v;
  }
  return std::nullopt;
}

VertexSet punctured_layer_set(const Graph& g, const Graph& h, Vertex v, Vertex x, int r) {
  check_vertex(g, v, "vertex");
  check_vertex(h, x, "layer vertex");
  require(min_degree(g) >= static_cast<std::size_t>(r), "delta(G) >= r");
  require(is_connected(g), "G is connected");
  require(is_connected(h), "H is connected");
  require(h.degree(x) > 0, "vertex " + std::to_string(x) + " has a neighbor in H");
  std::size_t heavy = 0;
  for (Vertex u : g.neighbor_list(v)) heavy += g.degree(u) > static_cast<std::size_t>(r) ? 1 : 0;
  require(heavy >= static_cast<std::size_t>(r),
          "vertex " + std::to_string(v) + " has r = " + std::to_string(r) + " neighbors of degree > " +
              std::to_string(r) + " (found " + std::to_string(heavy) + ")");
  VertexSet out = layer_set(g, h, x);
  out.erase(product_index(h, v, x));
  return verified(g, h, std::move(out), r, "punctured layer");
}

VertexSet odd_order_set(const Graph& g, const Graph& h) {
  require(is_connected(g) && g.order() > 0, "G is connected");
  require(is_connected(h), "H is connected");
  require(min_degree(g) >= 2, "delta(G) >= 2");
  require(max_degree(g) >= 3, "Delta(G) >= 3");
  require(g.order() % 2 == 1, "|V(G)| is odd");
  const auto [x, y] = first_edge(h);

  const auto path = CorePathSearch(g).find();
  if (!path) throw ConstructionError("odd order: no suitable core path found");
  TwoLayerSeeds seeds(g, h, x, y);
  VertexSet core(g.order());
  for (Vertex v : *path) core.insert(v);

  if (path->size() % 2 == 1) {
    // v2, v4, ..., v_{p-1} in both layers, the rest of G in layer x.
    for (std::size_t i = 1; i + 1 < path->size(); i += 2) seeds.both((*path)[i]);
    (g.all() - core).for_each([&](Vertex v) { seeds.first(v); });
  } else {
    core.for_each([&](Vertex v) { seeds.first(v); });
    absorb_paths(g, core, seeds);
  }
  VertexSet out = seeds.set();
  if (out.size() + 1 > g.order()) throw ConstructionError("odd order: set exceeds |V(G)| - 1");
  return verified(g, h, std::move(out), 2, "odd order");
}

VertexSet odd_cycle_set(const Graph& g, const Graph& h) {
  require(is_connected(g) && g.order() > 0, "G is connected");
  require(is_connected(h), "H is connected");
  require(min_degree(g) == 2, "delta(G) = 2");
  require(max_degree(g) >= 3, "Delta(G) >= 3");
  const auto odd = contains_odd_cycle(g);
  require(odd.found, "G contains an odd cycle");
  if (g.order() % 2 == 1) return odd_order_set(g, h);

  const auto [x, y] = first_edge(h);
  TwoLayerSeeds seeds(g, h, x, y);
  VertexSet covered(g.order());
  for (Vertex v : odd.cycle) {
    covered.insert(v);
    seeds.first(v);
  }
  absorb_paths(g, covered, seeds);
  VertexSet out = seeds.set();
  if (out.size() + 1 > g.order()) throw ConstructionError("odd cycle: set exceeds |V(G)| - 1");
  return verified(g, h, std::move(out), 2, "odd cycle");
}

}  // namespace bootperc
