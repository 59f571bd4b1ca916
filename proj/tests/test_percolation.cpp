#include <gtest/gtest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "bootperc/builders.hpp"
#include "bootperc/constructions.hpp"
#include "bootperc/corpus.hpp"
#include "bootperc/errors.hpp"
#include "bootperc/percolation.hpp"
#include "oracles.hpp"

using namespace bootperc;

namespace {

VertexSet random_subset(std::size_t n, std::mt19937_64& rng, unsigned percent) {
  std::uniform_int_distribution<unsigned> roll(0, 99);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if (roll(rng) < percent) s.insert(v);
  }
  return s;
}

std::vector<bool> as_bools(const VertexSet& s) {
  std::vector<bool> out(s.width());
  s.for_each([&](Vertex v) { out[v] = true; });
  return out;
}

}  // namespace

TEST(Closure, Examples) {
  const Graph c6 = build_cycle(6);
  EXPECT_TRUE(closure(c6, 2, VertexSet(6, {0, 2, 4})).is_full());
  EXPECT_EQ(closure(build_path(5), 2, VertexSet(5, {0})), VertexSet(5, {0}));
  for (const auto& entry : corpus_graphs()) {
    EXPECT_TRUE(closure(entry.graph, 2, entry.graph.all()).is_full());
  }
  EXPECT_FALSE(propagates(c6, 2, VertexSet(6, {0, 3})));
  EXPECT_EQ(closure(c6, 2, VertexSet(6, {0, 3})), VertexSet(6, {0, 3}));
  EXPECT_FALSE(propagates(c6, 2, c6.empty_set()));
  EXPECT_TRUE(closure(c6, 2, c6.empty_set()).empty());
}

TEST(Closure, Errors) {
  const Graph c6 = build_cycle(6);
  EXPECT_THROW(closure(c6, 0, c6.empty_set()), PreconditionError);
  EXPECT_THROW(closure(c6, 2, VertexSet(7)), WidthMismatch);
  EXPECT_THROW(trace(c6, 2, VertexSet(5)), WidthMismatch);
}

TEST(Closure, ThresholdOneFillsTouchedComponents) {
  const Graph g = disjoint_union(build_cycle(4), build_path(3));
  const VertexSet c = closure(g, 1, VertexSet(7, {1}));
  EXPECT_EQ(c, VertexSet(7, {0, 1, 2, 3}));
}

TEST(Closure, MonotoneIdempotentAndMatchesOracles) {
  std::mt19937_64 rng(20240611);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 4 + round % 14;
    const Graph g = oracle::random_graph(n, 25 + (round * 7) % 50, rng());
    const int r = 1 + round % 3;
    const VertexSet a = random_subset(n, rng, 20);
    const VertexSet b = a | random_subset(n, rng, 20);
    const VertexSet ca = closure(g, r, a);
    ASSERT_TRUE(ca.is_subset_of(closure(g, r, b)));
    ASSERT_TRUE(a.is_subset_of(ca));
    ASSERT_EQ(closure(g, r, ca), ca);
    ASSERT_EQ(closure_naive(g, r, a), ca);
    ASSERT_EQ(as_bools(ca), oracle::closure(oracle::adjacency(g), r, as_bools(a)));
    ASSERT_EQ(trace(g, r, a).final_set(), ca);
  }
}

TEST(Closure, WorkspaceReuse) {
  const Graph g = build_petersen();
  PercolationWorkspace ws(g, 2);
  // Non-adjacent vertices share exactly one neighbour; adjacent ones none.
  EXPECT_EQ(ws.run(VertexSet(10, {0, 2})), 3U);
  EXPECT_EQ(ws.infected(), VertexSet(10, {0, 1, 2}));
  EXPECT_EQ(ws.run(VertexSet(10, {0, 1})), 2U);
  EXPECT_EQ(ws.run(VertexSet(10, {0, 1, 7})), closure(g, 2, VertexSet(10, {0, 1, 7})).size());
  EXPECT_EQ(ws.run(VertexSet(10, {0, 2})), 3U);
}

TEST(Trace, Examples) {
  const Graph c6 = build_cycle(6);
  const auto t = trace(c6, 2, VertexSet(6, {0, 2, 4}));
  EXPECT_EQ(t.final_round(), 1U);
  EXPECT_EQ(t.newly_infected.at(0), VertexSet(6, {1, 3, 5}));
  EXPECT_EQ(trace(c6, 2, c6.all()).final_round(), 0U);

  const Graph c5 = build_cycle(5);
  const Graph h = build_path(3);
  const Graph prod = direct_product(c5, h);
  const auto lt = trace(prod, 2, layer_set(c5, h, 0));
  VertexSet next_layer(prod.order());
  for (Vertex g = 0; g < 5; ++g) next_layer.insert(product_index(h, g, 1));
  EXPECT_EQ(lt.newly_infected.at(0), next_layer);
}

TEST(Trace, RoundSoundnessOnRandomInstances) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 5 + round % 12;
    const Graph g = oracle::random_graph(n, 40, rng());
    const int r = 1 + round % 3;
    const auto t = trace(g, r, random_subset(n, rng, 30));
    ASSERT_LE(t.final_round(), n);
    ASSERT_EQ(t.rounds.size(), t.newly_infected.size() + 1);
    for (std::size_t i = 1; i < t.rounds.size(); ++i) {
      ASSERT_FALSE(t.newly_infected[i - 1].empty());
      ASSERT_EQ(t.rounds[i], t.rounds[i - 1] | t.newly_infected[i - 1]);
      t.newly_infected[i - 1].for_each([&](Vertex v) {
        ASSERT_GE((g.neighbors(v) & t.rounds[i - 1]).size(), static_cast<std::size_t>(r));
      });
    }
  }
}

TEST(Trace, Json) {
  const nlohmann::json j = trace(build_cycle(6), 2, VertexSet(6, {0, 2, 4}));
  EXPECT_EQ(j["final_round"], 1);
  EXPECT_EQ(j["percolates"], true);
  EXPECT_EQ(j["rounds"][0], nlohmann::json({0, 2, 4}));
}
