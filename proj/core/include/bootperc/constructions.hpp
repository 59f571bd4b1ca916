#pragma once

#include <optional>

#include "bootperc/graph.hpp"

namespace bootperc {

// Explicit percolating sets in G × H. Every returned set is indexed over
// direct_product(G, H), i.e. (g, h) ↦ g·|V(H)| + h. Operations that take r
// verify their output with the engine and throw ConstructionError if it does
// not percolate; violated hypotheses raise HypothesisError.

/// The G-layer G^h = {(g, h) : g ∈ V(G)}. Not verified: it percolates only
/// when δ(G) ≥ r and H is connected.
VertexSet layer_set(const Graph& g, const Graph& h, Vertex layer);

/// S × {h1, h2} for adjacent h1, h2 and an r-percolating set S of G.
VertexSet double_layer_set(const Graph& g, const Graph& h, const VertexSet& seeds_in_g, Vertex h1, Vertex h2,
                           int r);

/// Smallest vertex v of G with at least r neighbors of degree > r, if any.
std::optional<Vertex> find_puncture_vertex(const Graph& g, int r);

/// G^x minus (v, x): |V(G)| - 1 vertices. Requires δ(G) ≥ r, connected G
/// and H, x with a neighbor in H, and r neighbors of v of degree > r.
VertexSet punctured_layer_set(const Graph& g, const Graph& h, Vertex v, Vertex x, int r);

/// At most |V(G)| - 1 vertices percolating at r = 2, for connected G, H with
/// δ(G) ≥ 2, Δ(G) ≥ 3 and |V(G)| odd.
VertexSet odd_order_set(const Graph& g, const Graph& h);

/// At most |V(G)| - 1 vertices percolating at r = 2, for connected G, H with
/// δ(G) = 2, Δ(G) ≥ 3 and an odd cycle in G.
VertexSet odd_cycle_set(const Graph& g, const Graph& h);

}  // namespace bootperc
