#pragma once

#include <string>
#include <vector>

#include "bootperc/grid.hpp"
#include "bootperc/solver.hpp"

namespace bootperc {

/// m(P_n × P_m, 2) for n, m >= 2.
///
/// Both sides even: n + m. (3, 3): 6. A side of length 2: the product is two
/// copies of the other path, giving 2(floor(k/2) + 1). Otherwise n + m - 1.
int grid_formula(int n, int m);

/// Perimeter of a set of cells after the rotation that turns the diagonal
/// grid adjacency into unit squares sharing edges: each square contributes 4
/// minus the number of occupied axis neighbours.
long embedding_perimeter(const std::vector<GridCoord>& cells);

struct ComponentPerimeter {
  GridPiece piece = GridPiece::G1;
  std::size_t cells = 0;
  /// From the coordinate embedding.
  long perimeter = 0;
  /// From the case formulas.
  long closed_form = 0;
  /// ceil(perimeter / 4).
  long bound = 0;
};

struct BoundReport {
  int n = 0;
  int m = 0;
  int r = 2;
  long lower = 0;
  std::string lower_origin;
  long upper = 0;
  std::string upper_origin;
  long formula = 0;
  std::vector<ComponentPerimeter> components;

  bool consistent() const { return lower <= formula && formula <= upper; }
};

/// Closed-form perimeter of the piece of P_n × P_m with the given parity.
long closed_form_perimeter(int n, int m, int parity);

/// Perimeter lower bound for P_n × P_m (n, m >= 3, not both 3), with the
/// grid construction as the upper bound. Throws ConstructionError when the
/// closed forms and the embedding evaluator disagree.
BoundReport perimeter_lower_bound(int n, int m);

/// Solver hint for P_n × P_m: the perimeter bound of each component.
ComponentBoundFn grid_perimeter_hint(int n, int m);

}  // namespace bootperc
