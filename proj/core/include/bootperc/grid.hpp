#pragma once

#include <array>
#include <compare>
#include <string_view>
#include <vector>

#include "bootperc/graph.hpp"

namespace bootperc {

/// Cell of the grid P_n × P_m in 1-based coordinates: x along P_n, y along
/// P_m, (1, 1) in the top-left corner.
struct GridCoord {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridCoord&) const = default;
};

/// P_n × P_m; (x, y) has index (x-1)·m + (y-1) and label "(x,y)".
Graph build_grid(int n, int m);
Vertex grid_vertex(int m, GridCoord c);
GridCoord grid_coord(int m, Vertex v);
VertexSet grid_cells_to_set(int n, int m, const std::vector<GridCoord>& cells);

/// The two components of P_n × P_m (n, m >= 2) are the two parity classes of
/// x + y. Both even: two copies of G1. n + m odd: two copies of G2. Both odd:
/// H1 (the class of (1,1)) and H2.
enum class GridPiece { G1, G2, H1, H2 };
std::string_view to_string(GridPiece piece);

struct GridComponent {
  GridPiece piece = GridPiece::G1;
  /// (x + y) mod 2 over the component.
  int parity = 0;
  std::vector<GridCoord> cells;
  VertexSet vertices;
};

/// parts[0] contains (1, 1).
struct GridComponents {
  int n = 0;
  int m = 0;
  std::array<GridComponent, 2> parts;
};

GridComponents grid_components(int n, int m);

enum class GridCase { Sub1_1, Sub1_2, Sub1_3, Sub2_1, Sub2_2, Sub3_1, Sub3_2, Sub3_3 };
std::string_view to_string(GridCase c);

/// Case of the construction for n >= m >= 3, (n, m) != (3, 3).
GridCase classify_grid(int n, int m);

/// A diagonal line segment walked from a boundary cell towards the spine
/// row; `seeds` are the selected cells on it.
struct Segment {
  GridCoord from;
  GridCoord to;
  std::vector<GridCoord> seeds;
};

/// Phase choices for the segment-and-spine pattern of one component.
struct SegmentPattern {
  /// 0: seed the boundary cell and every second cell after it; 1: shifted.
  int left_phase = 0;
  int right_phase = 0;
  /// Spine covers apex_left + spine_lo .. apex_right - spine_hi.
  int spine_lo = 1;
  int spine_hi = 1;
  auto operator<=>(const SegmentPattern&) const = default;
};

struct ComponentPlan {
  GridPiece piece = GridPiece::G1;
  int parity = 0;
  std::vector<GridCoord> cells;
  /// The four segments; empty for the listed Case 1 sets.
  std::vector<Segment> diagonals;
  /// Horizontal segment of selected cells on the apex row.
  std::vector<GridCoord> spine;
  /// Cells given by an explicit list.
  std::vector<GridCoord> listed;
  SegmentPattern pattern;
  bool repaired = false;

  std::vector<GridCoord> seeds() const;
};

struct GridConstruction {
  /// As requested by the caller.
  int n = 0;
  int m = 0;
  /// Plans are laid out for (max(n,m), min(n,m)); seeds() transposes back.
  bool transposed = false;
  GridCase case_tag = GridCase::Sub1_1;
  std::array<ComponentPlan, 2> components;

  /// All selected cells in the caller's orientation, sorted.
  std::vector<GridCoord> seeds() const;
  bool repaired() const { return components[0].repaired || components[1].repaired; }
};

/// Builds and verifies the construction. Throws PreconditionError outside
/// n, m >= 3 with (n, m) != (3, 3) and ConstructionError if no pattern of
/// the required size percolates.
GridConstruction plan_grid_construction(int n, int m);

/// Percolating set of P_n × P_m at r = 2 with exactly grid_formula(n, m)
/// vertices, verified by the engine.
VertexSet grid_percolating_set(int n, int m);

}  // namespace bootperc
