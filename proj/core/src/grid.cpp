#include "bootperc/grid.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bootperc/bounds.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"

namespace bootperc {

namespace {

void require_grid(int n, int m, int least) {
  if (n < least || m < least) {
    throw PreconditionError("grid sides must be at least " + std::to_string(least) + ", got " +
                            std::to_string(n) + "x" + std::to_string(m));
  }
}

std::vector<int> column_rows(int m, int x, int parity) {
  std::vector<int> rows;
  for (int y = 1; y <= m; ++y) {
    if ((x + y) % 2 == parity) rows.push_back(y);
  }
  return rows;
}

// Walks t = 0..length from `from` in direction (dx, dy), keeping t ≡ phase (mod 2).
Segment walk(GridCoord from, int dx, int dy, int length, int phase) {
  Segment seg{from, {from.x + dx * length, from.y + dy * length}, {}};
  for (int t = 0; t <= length; ++t) {
    if (t % 2 == phase) seg.seeds.push_back({from.x + dx * t, from.y + dy * t});
  }
  return seg;
}

struct Layout {
  int n;  // n >= m
  int m;
};

std::vector<GridCoord> component_cells(const Layout& g, int parity) {
  std::vector<GridCoord> cells;
  for (int x = 1; x <= g.n; ++x) {
    for (int y = 1; y <= g.m; ++y) {
      if ((x + y) % 2 == parity) cells.push_back({x, y});
    }
  }
  return cells;
}

// Four half-diagonals from the left and right columns meeting at two apexes on
// the middle row of the component, joined by a horizontal spine.
void segment_plan(const Layout& g, ComponentPlan& plan, const SegmentPattern& pattern) {
  plan.diagonals.clear();
  plan.spine.clear();
  plan.listed.clear();
  plan.pattern = pattern;

  const auto left = column_rows(g.m, 1, plan.parity);
  const int half_left = (left.back() - left.front()) / 2;
  plan.diagonals.push_back(walk({1, left.front()}, 1, 1, half_left, pattern.left_phase));
  plan.diagonals.push_back(walk({1, left.back()}, 1, -1, half_left, pattern.left_phase));

  const auto right = column_rows(g.m, g.n, plan.parity);
  const int half_right = (right.back() - right.front()) / 2;
  plan.diagonals.push_back(walk({g.n, right.front()}, -1, 1, half_right, pattern.right_phase));
  plan.diagonals.push_back(walk({g.n, right.back()}, -1, -1, half_right, pattern.right_phase));

  const int apex_left = 1 + half_left;
  const int apex_right = g.n - half_right;
  const int row = left.front() + half_left;
  for (int x = apex_left + pattern.spine_lo; x <= apex_right - pattern.spine_hi; ++x) {
    if ((x + row) % 2 == plan.parity) plan.spine.push_back({x, row});
  }
}

// Square grid with odd side m and floor(m/2) odd, class of (1,1): shortened
// diagonals plus three cells on the centre column.
void square_odd_plan(const Layout& g, ComponentPlan& plan) {
  const int m = g.m;
  const int half = m / 2;
  const int centre = (m + 1) / 2;
  plan.diagonals.clear();
  plan.spine.clear();
  plan.listed.clear();
  if (half >= 3) {
    const int reach = half - 3;
    plan.diagonals.push_back(walk({1, 1}, 1, 1, reach, 0));
    plan.diagonals.push_back(walk({1, m}, 1, -1, reach, 0));
    plan.diagonals.push_back(walk({g.n, 1}, -1, 1, reach, 0));
    plan.diagonals.push_back(walk({g.n, m}, -1, -1, reach, 0));
  }
  for (int y = centre - 2; y <= centre + 2; ++y) {
    if ((centre + y) % 2 == 0) plan.listed.push_back({centre, y});
  }
}

// Both sides even, class of (1,1).
std::vector<GridCoord> even_even_list(const Layout& g) {
  const int n = g.n;
  const int m = g.m;
  std::vector<GridCoord> cells{{1, 1}, {n, 2}, {n, m}};
  if (m % 4 == 0) cells.push_back({2, m});
  for (int k = 1; k <= (n - 4) / 2; ++k) cells.push_back({2 * k + 1, 3});
  const int pairs = (m == 4) ? 0 : (m % 4 == 0 ? (m - 4) / 4 : (m - 2) / 4);
  for (int k = 1; k <= pairs; ++k) {
    cells.push_back({1, 4 * k + 1});
    cells.push_back({n - 1, 4 * k + 1});
  }
  return cells;
}

std::size_t component_target(const Layout& g, int parity) {
  const bool both_odd = g.n % 2 == 1 && g.m % 2 == 1;
  if (both_odd) {
    return static_cast<std::size_t>(parity == 0 ? (g.n + g.m) / 2 : (g.n + g.m - 2) / 2);
  }
  return static_cast<std::size_t>(grid_formula(g.n, g.m) / 2);
}

bool covers_component(const Graph& grid, const Layout& g, const ComponentPlan& plan) {
  const auto seeds = plan.seeds();
  const VertexSet reached = closure(grid, 2, grid_cells_to_set(g.n, g.m, seeds));
  for (const auto& c : plan.cells) {
    if (!reached.contains(grid_vertex(g.m, c))) return false;
  }
  return true;
}

const std::vector<SegmentPattern>& repair_patterns() {
  static const std::vector<SegmentPattern> patterns = [] {
    std::vector<SegmentPattern> out;
    for (int lp = 0; lp <= 1; ++lp) {
      for (int rp = 0; rp <= 1; ++rp) {
        for (int lo = 1; lo <= 3; ++lo) {
          for (int hi = 1; hi <= 3; ++hi) out.push_back({lp, rp, lo, hi});
        }
      }
    }
    return out;
  }();
  return patterns;
}

// Falls back to the other phase choices of the segment pattern at the same
// size when the primary layout fails to percolate.
void repair(const Graph& grid, const Layout& g, ComponentPlan& plan, std::size_t target) {
  for (const auto& pattern : repair_patterns()) {
    segment_plan(g, plan, pattern);
    if (plan.seeds().size() == target && covers_component(grid, g, plan)) {
      plan.repaired = true;
      return;
    }
  }
  throw ConstructionError("no segment pattern of size " + std::to_string(target) +
                          " percolates component " + std::string(to_string(plan.piece)) +
                          " of the " + std::to_string(g.n) + "x" + std::to_string(g.m) +
                          " grid");
}

}  // namespace

Graph build_grid(int n, int m) {
  require_grid(n, m, 1);
  const Graph raw = direct_product(build_path(static_cast<std::size_t>(n)),
                                   build_path(static_cast<std::size_t>(m)));
  std::vector<std::string> labels(raw.order());
  for (Vertex v = 0; v < raw.order(); ++v) {
    const auto c = grid_coord(m, v);
    labels[v] = "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
  }
  return raw.with_labels(std::move(labels));
}

Vertex grid_vertex(int m, GridCoord c) {
  return static_cast<Vertex>((c.x - 1) * m + (c.y - 1));
}

GridCoord grid_coord(int m, Vertex v) {
  const int i = static_cast<int>(v);
  return {i / m + 1, i % m + 1};
}

VertexSet grid_cells_to_set(int n, int m, const std::vector<GridCoord>& cells) {
  VertexSet set(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (const auto& c : cells) {
    if (c.x < 1 || c.x > n || c.y < 1 || c.y > m) {
      throw PreconditionError("cell (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                              ") outside the grid");
    }
    set.insert(grid_vertex(m, c));
  }
  return set;
}

std::string_view to_string(GridPiece piece) {
  switch (piece) {
    case GridPiece::G1: return "G1";
    case GridPiece::G2: return "G2";
    case GridPiece::H1: return "H1";
    case GridPiece::H2: return "H2";
  }
  return "?";
}

GridComponents grid_components(int n, int m) {
  require_grid(n, m, 2);
  GridComponents out;
  out.n = n;
  out.m = m;
  const bool even_even = n % 2 == 0 && m % 2 == 0;
  const bool odd_odd = n % 2 == 1 && m % 2 == 1;
  for (int parity = 0; parity <= 1; ++parity) {
    auto& part = out.parts[parity];
    part.parity = parity;
    part.piece = even_even ? GridPiece::G1
                 : odd_odd ? (parity == 0 ? GridPiece::H1 : GridPiece::H2)
                           : GridPiece::G2;
    part.vertices = VertexSet(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= m; ++y) {
        if ((x + y) % 2 != parity) continue;
        part.cells.push_back({x, y});
        part.vertices.insert(grid_vertex(m, {x, y}));
      }
    }
  }
  return out;
}

std::string_view to_string(GridCase c) {
  switch (c) {
    case GridCase::Sub1_1: return "1.1";
    case GridCase::Sub1_2: return "1.2";
    case GridCase::Sub1_3: return "1.3";
    case GridCase::Sub2_1: return "2.1";
    case GridCase::Sub2_2: return "2.2";
    case GridCase::Sub3_1: return "3.1";
    case GridCase::Sub3_2: return "3.2";
    case GridCase::Sub3_3: return "3.3";
  }
  return "?";
}

GridCase classify_grid(int n, int m) {
  if (n < m) std::swap(n, m);
  require_grid(n, m, 3);
  if (n == 3 && m == 3) throw PreconditionError("the 3x3 grid has no segment construction");
  if (n % 2 == 0 && m % 2 == 0) {
    if (m == 4) return GridCase::Sub1_1;
    return m % 4 == 0 ? GridCase::Sub1_2 : GridCase::Sub1_3;
  }
  if ((n + m) % 2 == 1) return n % 2 == 0 ? GridCase::Sub2_1 : GridCase::Sub2_2;
  if ((m / 2) % 2 == 1) return n == m ? GridCase::Sub3_2 : GridCase::Sub3_1;
  return GridCase::Sub3_3;
}

std::vector<GridCoord> ComponentPlan::seeds() const {
  std::set<GridCoord> all(listed.begin(), listed.end());
  for (const auto& seg : diagonals) all.insert(seg.seeds.begin(), seg.seeds.end());
  all.insert(spine.begin(), spine.end());
  return {all.begin(), all.end()};
}

std::vector<GridCoord> GridConstruction::seeds() const {
  std::vector<GridCoord> out;
  for (const auto& plan : components) {
    for (auto c : plan.seeds()) {
      if (transposed) std::swap(c.x, c.y);
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridConstruction plan_grid_construction(int n, int m) {
  GridConstruction out;
  out.n = n;
  out.m = m;
  out.case_tag = classify_grid(n, m);
  out.transposed = n < m;
  const Layout g{std::max(n, m), std::min(n, m)};
  const Graph grid = build_grid(g.n, g.m);
  const auto pieces = grid_components(g.n, g.m);

  for (int parity = 0; parity <= 1; ++parity) {
    auto& plan = out.components[parity];
    plan.parity = parity;
    plan.piece = pieces.parts[parity].piece;
    plan.cells = component_cells(g, parity);
  }

  switch (out.case_tag) {
    case GridCase::Sub1_1:
    case GridCase::Sub1_2:
    case GridCase::Sub1_3: {
      // Second copy is the reflection y -> m + 1 - y of the first.
      out.components[0].listed = even_even_list(g);
      for (auto c : out.components[0].listed) {
        out.components[1].listed.push_back({c.x, g.m + 1 - c.y});
      }
      break;
    }
    case GridCase::Sub3_2:
      square_odd_plan(g, out.components[0]);
      segment_plan(g, out.components[1], {});
      break;
    default:
      segment_plan(g, out.components[0], {});
      segment_plan(g, out.components[1], {});
      break;
  }

  for (auto& plan : out.components) {
    const std::size_t target = component_target(g, plan.parity);
    if (plan.seeds().size() != target || !covers_component(grid, g, plan)) {
      repair(grid, g, plan, target);
    }
  }

  const auto seeds = out.seeds();
  const Graph requested = build_grid(n, m);
  if (seeds.size() != static_cast<std::size_t>(grid_formula(n, m)) ||
      !propagates(requested, 2, grid_cells_to_set(n, m, seeds))) {
    throw ConstructionError("grid construction failed verification on " + std::to_string(n) + "x" +
                            std::to_string(m));
  }
  return out;
}

VertexSet grid_percolating_set(int n, int m) {
  return grid_cells_to_set(n, m, plan_grid_construction(n, m).seeds());
}

}  // namespace bootperc
