#pragma once

// Reference implementations used only by tests. They share no code with the
// library beyond reading a Graph's edge list.

#include <cstdint>
#include <optional>
#include <vector>

#include "bootperc/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency(const bootperc::Graph& g);

/// Synchronous rounds over a dense matrix until nothing changes.
std::vector<bool> closure(const Matrix& adj, int r, std::vector<bool> infected);

bool percolates(const Matrix& adj, int r, const std::vector<bool>& seeds);

/// Smallest percolating set by trying every subset in order of size, then
/// by bitmask. Order <= 20.
struct Minimum {
  std::size_t value = 0;
  std::uint32_t mask = 0;
};
Minimum min_percolating(const bootperc::Graph& g, int r);

/// Exhaustive isomorphism test by permutation; order <= 9.
bool isomorphic(const bootperc::Graph& a, const bootperc::Graph& b);

/// Seeded G(n, p) with p given in percent.
bootperc::Graph random_graph(std::size_t n, unsigned percent, std::uint64_t seed);

}  // namespace oracle
