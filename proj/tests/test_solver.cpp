#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <span>

#include <nlohmann/json.hpp>

#include "bootperc/analysis.hpp"
#include "bootperc/builders.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/solver.hpp"
#include "oracles.hpp"

using namespace bootperc;

namespace {

std::size_t value(const Graph& g, int r, const SolveOptions& o = {}) {
  const auto report = min_percolating(g, r, o);
  EXPECT_TRUE(report.optimal());
  EXPECT_TRUE(propagates(g, r, report.witness));
  EXPECT_EQ(report.witness.size(), report.value.value_or(0));
  return report.value.value_or(0);
}

}  // namespace

TEST(Forced, Examples) {
  EXPECT_EQ(forced_vertices(build_path(5), 2), VertexSet(5, {0, 4}));
  EXPECT_TRUE(forced_vertices(build_cycle(7), 2).empty());
  const Graph g = direct_product(build_star_plus_edge(6), build_star(6));
  const VertexSet f = forced_vertices(g, 2);
  EXPECT_EQ(f.size(), 15U);
  f.for_each([&](Vertex v) { EXPECT_EQ(g.degree(v), 1U); });
}

TEST(Solver, Examples) {
  EXPECT_EQ(value(build_path(5), 2), 3U);
  EXPECT_EQ(value(direct_product(build_path(3), build_path(3)), 2), 6U);
  EXPECT_EQ(value(build_complete_bipartite(3, 3), 3), 3U);
  EXPECT_EQ(value(build_cycle(10), 2), 5U);
}

TEST(Solver, ReportFields) {
  const auto report = min_percolating(build_cycle(6), 2);
  EXPECT_TRUE(report.exhaustive);
  EXPECT_EQ(report.value, 3U);
  EXPECT_EQ(report.witness, VertexSet(6, {0, 2, 4}));
  EXPECT_LE(report.lower_bound_used.value, 3U);
  EXPECT_GT(report.sets_examined, 0U);
  const nlohmann::json j = report;
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["witness"], nlohmann::json({0, 2, 4}));
}

TEST(Solver, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs;
  for (const auto& entry : corpus_graphs()) {
    if (entry.graph.order() <= 12) graphs.push_back(entry.graph);
  }
  for (int i = 0; i < 60; ++i) graphs.push_back(oracle::random_graph(3 + i % 10, 30 + (i * 11) % 50, rng()));
  for (const auto& g : graphs) {
    for (int r = 1; r <= 3; ++r) {
      const auto want = oracle::min_percolating(g, r);
      const auto report = min_percolating(g, r);
      ASSERT_EQ(report.value, want.value);
      ASSERT_TRUE(propagates(g, r, report.witness));
      ASSERT_EQ(report.witness.size(), want.value);
    }
  }
}

TEST(Solver, WitnessIsLexicographicallySmallest) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(4 + i % 8, 45, rng());
    const auto report = min_percolating(g, 2);
    // Every lexicographically smaller set of the same size must fail.
    const std::size_t n = g.order();
    const std::size_t k = *report.value;
    std::vector<Vertex> pick(k);
    std::function<void(std::size_t, Vertex)> walk = [&](std::size_t depth, Vertex from) {
      if (depth == k) {
        const VertexSet s(n, std::span<const Vertex>(pick));
        if (lex_less(s, report.witness)) {
          ASSERT_FALSE(propagates(g, 2, s)) << s.to_string();
        }
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        pick[depth] = v;
        walk(depth + 1, v + 1);
      }
    };
    walk(0, 0);
  }
}

TEST(Solver, ComponentAdditivity) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const Graph a = oracle::random_graph(3 + i % 6, 50, rng());
    const Graph b = oracle::random_graph(3 + (i * 5) % 7, 40, rng());
    EXPECT_EQ(value(disjoint_union(a, b), 2), value(a, 2) + value(b, 2));
  }
}

TEST(Solver, Sandwich) {
  for (const auto& entry : corpus_graphs()) {
    for (int r = 1; r <= 3; ++r) {
      const auto report = min_percolating(entry.graph, r);
      const VertexSet greedy = greedy_upper(entry.graph, r);
      EXPECT_TRUE(propagates(entry.graph, r, greedy)) << entry.name;
      EXPECT_LE(forced_vertices(entry.graph, r).size(), *report.value);
      EXPECT_LE(*report.value, greedy.size()) << entry.name;
      EXPECT_GE(*report.value, report.lower_bound_used.value);
    }
  }
}

TEST(Greedy, Examples) {
  EXPECT_GE(greedy_upper(build_cycle(6), 2).size(), 3U);
  EXPECT_EQ(greedy_upper(build_complete(4), 2).size(), 2U);
}

TEST(Solver, DeterministicAcrossWorkers) {
  std::vector<Graph> graphs{build_petersen(), direct_product(build_cycle(5), build_path(4)),
                            direct_product(build_path(6), build_path(5)), build_hypercube(4)};
  for (const auto& g : graphs) {
    for (int r = 2; r <= 3; ++r) {
      SolveOptions one;
      SolveOptions four;
      four.workers = 4;
      const auto a = min_percolating(g, r, one);
      const auto b = min_percolating(g, r, four);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.witness, b.witness);
    }
  }
}

TEST(Solver, BudgetExhaustionIsInconclusive) {
  SolveOptions tiny;
  tiny.budget = 5;
  const Graph g = build_petersen();
  const auto report = min_percolating(g, 2, tiny);
  EXPECT_FALSE(report.optimal());
  EXPECT_FALSE(report.value.has_value());
  EXPECT_FALSE(report.exhaustive);
  EXPECT_TRUE(propagates(g, 2, report.witness));
  EXPECT_LE(report.lower_bound_used.value, report.upper_bound);
  EXPECT_EQ(report.upper_bound, report.witness.size());
  const nlohmann::json j = report;
  EXPECT_EQ(j["status"], "inconclusive");
  EXPECT_TRUE(j["value"].is_null());
}

TEST(Solver, ComponentBoundHintIsUsed) {
  SolveOptions hinted;
  hinted.component_bound = [](const Graph&, const VertexSet&) -> std::optional<LowerBound> {
    return LowerBound{3, BoundOrigin::Perimeter};
  };
  const auto report = min_percolating(build_cycle(6), 2, hinted);
  EXPECT_EQ(report.value, 3U);
  EXPECT_EQ(report.lower_bound_used.origin, BoundOrigin::Perimeter);
  ASSERT_EQ(report.components.size(), 1U);
  EXPECT_EQ(report.components[0].certificate, BoundOrigin::Perimeter);
}
