// Micro benchmarks for the hot paths: group closure, graph construction,
// the exact clique search, and the full density pipeline.

#include <benchmark/benchmark.h>

#include <vector>

#include "ekr/clique.hpp"
#include "ekr/constructions.hpp"
#include "ekr/density.hpp"
#include "ekr/group.hpp"

namespace {

using namespace ekr;

void BM_GroupClosure_Sym(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = symmetric_group(n);
    benchmark::DoNotOptimize(g.order());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GroupClosure_Sym)->Arg(6)->Arg(7)->Arg(8);

void BM_GroupClosure_WreathSylow(benchmark::State& state) {
  for (auto _ : state) {
    PermGroup g = iterated_wreath_sylow(2, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupClosure_WreathSylow)->Arg(3)->Arg(4);

void BM_DerangementGraph(benchmark::State& state) {
  PermGroup g = action_on_2subsets(symmetric_group(5));
  for (auto _ : state) {
    UndirectedGraph graph = derangement_graph(g);
    benchmark::DoNotOptimize(graph.edge_count());
  }
}
BENCHMARK(BM_DerangementGraph);

void BM_MaxClique_Intersection(benchmark::State& state) {
  // Exact clique search over the fixed-point elements of S5 on pairs.
  PermGroup g = action_on_2subsets(symmetric_group(5));
  LabeledGraph lg = intersection_graph(g);
  for (auto _ : state) {
    CliqueResult r = max_clique(lg.graph);
    benchmark::DoNotOptimize(r.size);
  }
  state.counters["vertices"] = static_cast<double>(lg.graph.vertex_count());
}
BENCHMARK(BM_MaxClique_Intersection);

void BM_Rho_EndToEnd(benchmark::State& state) {
  std::vector<PermGroup> groups;
  groups.push_back(action_on_2subsets(symmetric_group(4)));
  groups.push_back(action_on_2subsets(alternating_group(5)));
  groups.push_back(thm16i_group(5, std::vector<std::uint64_t>{kAdjacentPairSeed}));
  const PermGroup& g = groups[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    DensityResult r = intersection_density(g);
    benchmark::DoNotOptimize(r.alpha);
  }
  state.SetLabel(g.name());
}
BENCHMARK(BM_Rho_EndToEnd)->Arg(0)->Arg(1)->Arg(2);

void BM_Rho_ForceExact(benchmark::State& state) {
  PermGroup g = action_on_2subsets(symmetric_group(5));
  DensityOptions opts;
  opts.force_exact = true;
  for (auto _ : state) {
    DensityResult r = intersection_density(g, opts);
    benchmark::DoNotOptimize(r.alpha);
  }
}
BENCHMARK(BM_Rho_ForceExact);

void BM_StrictEkr(benchmark::State& state) {
  PermGroup g = frobenius_lift(5, 4, std::vector<std::uint64_t>{kAdjacentPairSeed});
  DensityOptions opts;
  opts.compute_strict = true;
  for (auto _ : state) {
    DensityResult r = intersection_density(g, opts);
    benchmark::DoNotOptimize(r.strict_ekr.has_value());
  }
}
BENCHMARK(BM_StrictEkr);

}  // namespace

BENCHMARK_MAIN();
