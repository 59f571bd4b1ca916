#pragma once

#include <cstddef>

#include "bootperc/graph.hpp"

namespace bootperc {

/// P_n with edges {i, i+1}; vertex i is labelled i+1.
Graph build_path(std::size_t n);
/// C_n, n >= 3.
Graph build_cycle(std::size_t n);
/// K_n, n >= 1.
Graph build_complete(std::size_t n);
/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
Graph build_complete_bipartite(std::size_t a, std::size_t b);
/// Q_d on 2^d vertices, adjacent iff the indices differ in one bit.
Graph build_hypercube(std::size_t d);
/// K_{1,n-1} with centre 0.
Graph build_star(std::size_t n);
/// K_{1,n-1} plus the edge between leaves 1 and 2, n >= 3.
Graph build_star_plus_edge(std::size_t n);
/// B_m: C_6 on 0..5 plus m-1 internally disjoint paths of length three
/// between vertices 0 and 3. Path i uses vertices 6+2i and 7+2i.
Graph build_b_family(std::size_t m);

/// G × H. Vertex (g, h) has index g·|V(H)| + h and label "(lg,lh)".
Graph direct_product(const Graph& g, const Graph& h);
/// G ⊔ H with H's vertices shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Index of (g, h) in direct_product(G, H).
inline Vertex product_index(const Graph& h, Vertex g_vertex, Vertex h_vertex) {
  return static_cast<Vertex>(g_vertex * h.order() + h_vertex);
}

}  // namespace bootperc
