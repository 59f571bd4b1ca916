#include <benchmark/benchmark.h>

#include "bootperc/builders.hpp"
#include "bootperc/grid.hpp"
#include "bootperc/percolation.hpp"
#include "bootperc/solver.hpp"

using namespace bootperc;

static void BM_ClosureGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build_grid(side, side);
  const VertexSet seeds = grid_percolating_set(side, side);
  PercolationWorkspace ws(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ws.run(seeds));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.order()));
}
BENCHMARK(BM_ClosureGrid)->Arg(10)->Arg(20)->Arg(40);

static void BM_ClosureNaiveGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build_grid(side, side);
  const VertexSet seeds = grid_percolating_set(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(closure_naive(g, 2, seeds));
}
BENCHMARK(BM_ClosureNaiveGrid)->Arg(10)->Arg(20);

static void BM_SolveGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = build_grid(side, side);
  for (auto _ : state) benchmark::DoNotOptimize(min_percolating(g, 2));
}
BENCHMARK(BM_SolveGrid)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SolveHypercube(benchmark::State& state) {
  const Graph g = build_hypercube(4);
  for (auto _ : state) benchmark::DoNotOptimize(min_percolating(g, 4));
}
BENCHMARK(BM_SolveHypercube)->Unit(benchmark::kMillisecond);

static void BM_SolveWorkers(benchmark::State& state) {
  const Graph g = direct_product(build_star_plus_edge(6), build_star(6));
  SolveOptions o;
  o.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_percolating(g, 2, o));
}
BENCHMARK(BM_SolveWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
