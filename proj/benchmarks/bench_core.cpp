#include <benchmark/benchmark.h>

#include "ncgraph/corpus.hpp"
#include "ncgraph/graph.hpp"

namespace {

const ncg::FiniteGroup& s4xc3() {
  static const ncg::FiniteGroup g = ncg::builtin("S4xC3");
  return g;
}

void BM_EnumerateS4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ncg::builtin("S4"));
}
BENCHMARK(BM_EnumerateS4);

void BM_SubgroupLattice_S4(benchmark::State& state) {
  const ncg::FiniteGroup g = ncg::builtin("S4");
  for (auto _ : state) benchmark::DoNotOptimize(ncg::all_subgroups(g));
}
BENCHMARK(BM_SubgroupLattice_S4);

void BM_NcGraph_S4xC3(benchmark::State& state) {
  const ncg::FiniteGroup& g = s4xc3();
  const ncg::SubgroupLattice lat = ncg::all_subgroups(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(ncg::build_graph(g, ncg::GraphKind::nc, &lat));
}
BENCHMARK(BM_NcGraph_S4xC3);

void BM_NcGraph_NoLattice_S4xC3(benchmark::State& state) {
  const ncg::FiniteGroup& g = s4xc3();
  for (auto _ : state)
    benchmark::DoNotOptimize(ncg::build_graph(g, ncg::GraphKind::nc, nullptr));
}
BENCHMARK(BM_NcGraph_NoLattice_S4xC3);

void BM_AllPairsBfs_Nc_S4xC3(benchmark::State& state) {
  const ncg::FiniteGroup& g = s4xc3();
  const ncg::SubgroupLattice lat = ncg::all_subgroups(g);
  const ncg::ElementGraph nc = ncg::build_graph(g, ncg::GraphKind::nc, &lat);
  for (auto _ : state) benchmark::DoNotOptimize(ncg::all_pairs_distances(nc));
}
BENCHMARK(BM_AllPairsBfs_Nc_S4xC3);

}  // namespace

BENCHMARK_MAIN();
