#include <benchmark/benchmark.h>

#include <random>

#include "cblock/bipartite_contraction.hpp"
#include "cblock/cnf.hpp"
#include "cblock/contraction_vc.hpp"
#include "cblock/reductions.hpp"
#include "cblock/transversal.hpp"
#include "cblock/vertex_cover.hpp"

namespace {

using namespace cblock;

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

void BM_VcBranching(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vc_branching(g));
}
BENCHMARK(BM_VcBranching)->Arg(20)->Arg(40)->Arg(60);

void BM_VcBipartite(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin(0.2);
  Graph g(2 * side);
  for (Vertex a = 0; a < side; ++a) {
    for (Vertex b = side; b < 2 * side; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(vc_bipartite(g));
}
BENCHMARK(BM_VcBipartite)->Arg(50)->Arg(200);

void BM_BcDecide(benchmark::State& state) {
  const Graph g = random_graph(12, 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bc_decide(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BcDecide)->Arg(1)->Arg(2)->Arg(3);

void BM_Algorithm1(benchmark::State& state) {
  const Graph g = random_graph(10, 0.3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(algorithm1(g, static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_Algorithm1)->Arg(2)->Arg(3)->Arg(4);

void BM_FvsCopyInstance(benchmark::State& state) {
  const GadgetInstance inst = build_thm1(phi0(), Graph::cycle(4));
  for (auto _ : state) benchmark::DoNotOptimize(fvs(inst.graph));
}
BENCHMARK(BM_FvsCopyInstance)->Unit(benchmark::kMillisecond);

void BM_TauP4PathInstance(benchmark::State& state) {
  const GadgetInstance inst = build_thm3(phi0(), 4);
  const HitFamily fam(Relation::Subgraph, {Graph::path(4)});
  for (auto _ : state) benchmark::DoNotOptimize(tau(inst.graph, fam));
}
BENCHMARK(BM_TauP4PathInstance)->Unit(benchmark::kMillisecond);

void BM_MinorK4(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.25, 5);
  const Graph k4 = Graph::complete(4);
  for (auto _ : state) benchmark::DoNotOptimize(contains(g, k4, Relation::Minor));
}
BENCHMARK(BM_MinorK4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
