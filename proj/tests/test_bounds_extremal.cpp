#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bootperc/analysis.hpp"
#include "bootperc/bounds.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/extremal.hpp"
#include "bootperc/graph_io.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"
#include "oracles.hpp"

using namespace bootperc;

TEST(GridFormula, Examples) {
  EXPECT_EQ(grid_formula(8, 8), 16);
  EXPECT_EQ(grid_formula(7, 6), 12);
  EXPECT_EQ(grid_formula(2, 5), 6);
  EXPECT_EQ(grid_formula(5, 2), 6);
  EXPECT_EQ(grid_formula(3, 3), 6);
  EXPECT_EQ(grid_formula(7, 5), 11);
  EXPECT_EQ(grid_formula(7, 7), 13);
  EXPECT_THROW(grid_formula(1, 5), PreconditionError);
}

// Two disjoint copies of P_m; an even path needs one seed more than half.
TEST(GridFormula, WidthTwoMatchesPathOracle) {
  for (int m = 2; m <= 10; ++m) {
    const auto path = oracle::min_percolating(build_path(static_cast<std::size_t>(m)), 2);
    EXPECT_EQ(static_cast<std::size_t>(grid_formula(2, m)), 2 * path.value) << m;
  }
}

TEST(Perimeter, GenericEvaluator) {
  EXPECT_EQ(embedding_perimeter({{1, 1}}), 4);
  EXPECT_EQ(embedding_perimeter({{1, 1}, {2, 2}}), 6);
  EXPECT_EQ(embedding_perimeter({{1, 1}, {2, 2}, {1, 3}, {2, 0}}), 10);
  EXPECT_EQ(embedding_perimeter({{2, 2}, {1, 1}, {3, 1}, {1, 3}, {3, 3}}), 12);
}

TEST(Perimeter, Examples) {
  const auto a = perimeter_lower_bound(8, 8);
  EXPECT_EQ(a.lower, 16);
  ASSERT_EQ(a.components.size(), 2U);
  EXPECT_EQ(a.components[0].perimeter, 30);
  EXPECT_EQ(a.components[1].perimeter, 30);
  EXPECT_EQ(perimeter_lower_bound(7, 6).lower, 12);
  const auto c = perimeter_lower_bound(7, 5);
  EXPECT_EQ(c.lower, 11);
  EXPECT_EQ(c.components[0].perimeter, 24);
  EXPECT_EQ(c.components[1].perimeter, 20);
  EXPECT_TRUE(c.consistent());
  EXPECT_EQ(c.upper_origin, "construction");
  EXPECT_THROW(perimeter_lower_bound(3, 3), PreconditionError);
}

TEST(Perimeter, ClosedFormAgreesWithEmbedding) {
  for (int n = 3; n <= 40; ++n) {
    for (int m = 3; m <= 40; ++m) {
      const auto pieces = grid_components(n, m);
      for (const auto& part : pieces.parts) {
        ASSERT_EQ(embedding_perimeter(part.cells), closed_form_perimeter(n, m, part.parity)) << n << "x" << m;
      }
    }
  }
}

TEST(Perimeter, SolverHint) {
  SolveOptions o;
  o.component_bound = grid_perimeter_hint(7, 6);
  const auto report = min_percolating(build_grid(7, 6), 2, o);
  EXPECT_EQ(report.value, 12U);
  EXPECT_EQ(report.lower_bound_used.value, 12U);
  for (const auto& c : report.components) EXPECT_EQ(c.certificate, BoundOrigin::Perimeter);
}

TEST(Characterization, Examples) {
  const auto c5 = check_extremal_characterization(build_cycle(5));
  EXPECT_TRUE(c5.lhs);
  EXPECT_TRUE(c5.rhs);
  EXPECT_TRUE(c5.odd_cycle);
  const auto c6 = check_extremal_characterization(build_cycle(6));
  EXPECT_TRUE(c6.lhs);
  EXPECT_TRUE(c6.rhs);
  EXPECT_EQ(c6.base_value, 3U);
  const auto b3 = check_extremal_characterization(build_b_family(3));
  EXPECT_FALSE(b3.lhs);
  EXPECT_FALSE(b3.rhs);
  EXPECT_LT(*b3.base_value, 5U);
  EXPECT_THROW(check_extremal_characterization(build_path(4)), PreconditionError);
  EXPECT_THROW(check_extremal_characterization(disjoint_union(build_cycle(3), build_cycle(3))),
               PreconditionError);
}

TEST(Characterization, HoldsOnSmallLabeledGraphs) {
  std::size_t graphs = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    for_each_labeled_graph(n, 2, [&](const Graph& g) {
      ++graphs;
      ASSERT_FALSE(check_extremal_characterization(g).counterexample()) << write_graph(g);
    });
  }
  // Connected labelled graphs with δ >= 2: 1 + 10 + 253.
  EXPECT_EQ(graphs, 264U);
}

TEST(Signature, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(7, 45, rng());
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0U);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    EXPECT_EQ(refinement_signature(g), refinement_signature(Graph::from_edges(7, edges)));
  }
  EXPECT_NE(refinement_signature(build_cycle(6)), refinement_signature(build_complete_bipartite(3, 3)));
}

TEST(Enumeration, SmallOrders) {
  const auto six = enumerate_extremal_bipartite(6);
  EXPECT_TRUE(std::any_of(six.begin(), six.end(), [](const ExtremalCandidate& c) {
    return oracle::isomorphic(c.graph, build_cycle(6));
  }));
  for (const auto& c : six) {
    EXPECT_TRUE(is_bipartite(c.graph).bipartite);
    EXPECT_GE(min_degree(c.graph), 2U);
    EXPECT_EQ(2 * c.witness.size(), c.graph.order());
    EXPECT_TRUE(propagates(c.graph, 2, c.witness));
  }
  EXPECT_THROW(enumerate_extremal_bipartite(9), PreconditionError);
}

TEST(Enumeration, EightVerticesIncludesTheta) {
  const auto eight = enumerate_extremal_bipartite(8);
  const Graph b2 = build_b_family(2);
  EXPECT_TRUE(std::any_of(eight.begin(), eight.end(), [&](const ExtremalCandidate& c) {
    return c.graph.order() == 8 && oracle::isomorphic(c.graph, b2);
  }));
  for (const auto& c : eight) {
    EXPECT_TRUE(propagates(c.graph, 2, c.witness));
    EXPECT_EQ(2 * c.witness.size(), c.graph.order());
  }
}
