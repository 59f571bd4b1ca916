#include "bootperc/bounds.hpp"

#include <set>
#include <utility>

#include "bootperc/errors.hpp"

namespace bootperc {

namespace {

long ceil_quarter(long p) { return (p + 3) / 4; }

std::vector<GridCoord> cells_of(int m, const VertexSet& vertices) {
  std::vector<GridCoord> cells;
  vertices.for_each([&](Vertex v) { cells.push_back(grid_coord(m, v)); });
  return cells;
}

}  // namespace

int grid_formula(int n, int m) {
  if (n < 2 || m < 2) {
    throw PreconditionError("grid_formula needs n, m >= 2, got " + std::to_string(n) + "x" +
                            std::to_string(m));
  }
  if (n == 2) return 2 * (m / 2 + 1);
  if (m == 2) return 2 * (n / 2 + 1);
  if (n == 3 && m == 3) return 6;
  if (n % 2 == 0 && m % 2 == 0) return n + m;
  return n + m - 1;
}

long embedding_perimeter(const std::vector<GridCoord>& cells) {
  // (x, y) -> (x + y, x - y) / 2 maps diagonal neighbours to axis neighbours
  // within one parity class.
  std::set<std::pair<int, int>> squares;
  for (const auto& c : cells) {
    const int a = c.x + c.y;
    const int b = c.x - c.y;
    squares.insert({(a - (a & 1)) / 2, (b - (b & 1)) / 2});
  }
  long total = 0;
  for (const auto& [a, b] : squares) {
    total += 4;
    for (const auto& nb : {std::pair{a + 1, b}, std::pair{a - 1, b}, std::pair{a, b + 1},
                           std::pair{a, b - 1}}) {
      if (squares.count(nb)) --total;
    }
  }
  return total;
}

long closed_form_perimeter(int n, int m, int parity) {
  const bool odd_odd = n % 2 == 1 && m % 2 == 1;
  if (!odd_odd) return 2L * n + 2L * m - 2;
  if (parity == 0) return 12 + 4L * ((n - 2) / 2) + 4L * ((m - 2) / 2);
  return 4L * (n / 2) + 4L * (m / 2);
}

BoundReport perimeter_lower_bound(int n, int m) {
  if (n < 3 || m < 3 || (n == 3 && m == 3)) {
    throw PreconditionError("perimeter bound needs n, m >= 3, not both 3");
  }
  BoundReport report;
  report.n = n;
  report.m = m;
  report.formula = grid_formula(n, m);
  report.lower_origin = "perimeter";
  const auto pieces = grid_components(n, m);
  for (const auto& part : pieces.parts) {
    ComponentPerimeter cp;
    cp.piece = part.piece;
    cp.cells = part.cells.size();
    cp.perimeter = embedding_perimeter(part.cells);
    cp.closed_form = closed_form_perimeter(n, m, part.parity);
    if (cp.perimeter != cp.closed_form) {
      throw ConstructionError("perimeter of " + std::string(to_string(part.piece)) + " in " +
                              std::to_string(n) + "x" + std::to_string(m) + ": embedding gives " +
                              std::to_string(cp.perimeter) + ", closed form " +
                              std::to_string(cp.closed_form));
    }
    cp.bound = ceil_quarter(cp.perimeter);
    report.lower += cp.bound;
    report.components.push_back(cp);
  }
  report.upper = static_cast<long>(plan_grid_construction(n, m).seeds().size());
  report.upper_origin = "construction";
  return report;
}

ComponentBoundFn grid_perimeter_hint(int n, int m) {
  return [n, m](const Graph& whole, const VertexSet& component) -> std::optional<LowerBound> {
    if (whole.order() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m)) {
      return std::nullopt;
    }
    const long p = embedding_perimeter(cells_of(m, component));
    return LowerBound{static_cast<std::size_t>(ceil_quarter(p)), BoundOrigin::Perimeter};
  };
}

}  // namespace bootperc
