#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "orbitals/futility.h"
#include "orbitals/orbital_graph.h"
#include "orbitals/perm_group.h"
#include "orbitals/refine.h"

namespace orbitals {
namespace {

std::string Cycle(Point first, Point last) {
  std::string s = "(";
  for (Point p = first; p <= last; ++p) {
    s += std::to_string(p) + (p == last ? ")" : ",");
  }
  return s;
}

// S_k wr S_2 on 2k points: two blocks of k, swapped by the last generator.
PermGroup Wreath(std::size_t k) {
  const std::size_t n = 2 * k;
  std::string swap;
  for (Point p = 1; p <= k; ++p) {
    swap += "(" + std::to_string(p) + "," + std::to_string(p + k) + ")";
  }
  return PermGroup(n, {ParseCycles("(1,2)", n), ParseCycles(Cycle(1, k), n),
                       ParseCycles(swap, n)});
}

void BM_ChainBuild(benchmark::State& state) {
  const std::size_t k = state.range(0);
  const PermGroup shape = Wreath(k);
  for (auto _ : state) {
    const PermGroup g(shape.degree(), shape.generators());
    benchmark::DoNotOptimize(g.Order());
  }
}
BENCHMARK(BM_ChainBuild)->Arg(4)->Arg(8)->Arg(16);

void BM_GraphBuild(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  g.Order();
  for (auto _ : state) {
    benchmark::DoNotOptimize(OrbitalGraph::Build(g, 1, 2).arc_count());
  }
}
BENCHMARK(BM_GraphBuild)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateBasePairs(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  g.Order();
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateBasePairs(g).size());
  }
}
BENCHMARK(BM_EnumerateBasePairs)->Arg(4)->Arg(8)->Arg(16);

// The three futility deciders on the same non-futile pair (within a block).
void BM_FutilityFast(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  g.Order();
  for (auto _ : state) benchmark::DoNotOptimize(IsFutileFast(g, 1, 2));
}
BENCHMARK(BM_FutilityFast)->Arg(4)->Arg(8)->Arg(16);

void BM_FutilityStructural(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  const OrbitalGraph graph = OrbitalGraph::Build(g, 1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IsFutileStructural(graph, g).futile);
  }
}
BENCHMARK(BM_FutilityStructural)->Arg(4)->Arg(8)->Arg(16);

void BM_FutilityOracle(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  const OrbitalGraph graph = OrbitalGraph::Build(g, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(IsFutileOracle(graph, g));
}
BENCHMARK(BM_FutilityOracle)->Arg(4)->Arg(8)->Arg(16);

void BM_RefineIndividualized(benchmark::State& state) {
  const PermGroup g = Wreath(state.range(0));
  const OrbitalGraph graph = OrbitalGraph::Build(g, 1, 2);
  const OrderedPartition start = IndividualizePoint(OrbitPartition(g), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RefineByGraph(start, graph).split_count);
  }
}
BENCHMARK(BM_RefineIndividualized)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
}  // namespace orbitals

BENCHMARK_MAIN();
