#include "bootperc/analysis.hpp"

#include <algorithm>
#include <deque>

namespace bootperc {

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    VertexSet comp(g.order());
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (Vertex u : g.neighbor_list(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BipartiteResult is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  BipartiteResult result;
  result.coloring.assign(n, -1);
  std::vector<Vertex> parent(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (result.coloring[root] != -1) continue;
    result.coloring[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbor_list(v)) {
        if (result.coloring[u] == -1) {
          result.coloring[u] = 1 - result.coloring[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (result.coloring[u] == result.coloring[v]) {
          // Equal BFS parity: walk both ends up to their common ancestor.
          std::vector<Vertex> left{v};
          std::vector<Vertex> right{u};
          Vertex a = v;
          Vertex b = u;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.bipartite = false;
          result.coloring.clear();
          result.odd_cycle = std::move(left);
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          return result;
        }
      }
    }
  }
  return result;
}

OddCycleResult contains_odd_cycle(const Graph& g) {
  auto b = is_bipartite(g);
  return {!b.bipartite, std::move(b.odd_cycle)};
}

bool is_odd_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.order() % 2 == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace bootperc
