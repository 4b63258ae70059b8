#include "dqwalk/arc_space.hpp"
#include "dqwalk/factorizer.hpp"
#include "dqwalk/graph.hpp"
#include "dqwalk/linalg.hpp"
#include "dqwalk/walks.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace dqw;

Graph bench_graph(int selector) {
  switch (selector) {
    case 0: return build_family("complete", {6});
    case 1: return build_family("petersen", {});
    case 2: return build_family("hypercube", {3});
    default: return build_family("hypercube", {4});
  }
}

void SymmetricEig(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const Matrix a = g.adjacency.to_real();
  for (auto _ : state) {
    auto dec = symmetric_eig(a);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(SymmetricEig)->DenseRange(0, 3);

void ExpmSkew(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const ArcSpace space = build_arc_space(g);
  const Matrix skew = distance_digraphs_bfs(space).skew[1].to_real();
  for (auto _ : state) {
    Matrix e = expm_skew(skew, 1.25);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(ExpmSkew)->DenseRange(0, 3);

void DistanceDigraphs(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  const ArcSpace space = build_arc_space(g);
  for (auto _ : state) {
    auto family = distance_digraphs_bfs(space);
    benchmark::DoNotOptimize(family);
  }
}
BENCHMARK(DistanceDigraphs)->DenseRange(0, 3);

void DrgRecognition(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto verdict = check_distance_regular(g);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(DrgRecognition)->DenseRange(0, 3);

void FullFactorization(benchmark::State& state) {
  const Graph g = bench_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = factorize(g);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(FullFactorization)->DenseRange(0, 2);

void CoSimulation(benchmark::State& state) {
  const FactorizationOutcome out = run_factorization(build_family("petersen", {}));
  const ArcState psi = make_uniform_state(out.space.arc_count());
  for (auto _ : state) {
    double deviation = compare_evolutions(out.walk, out.result, psi, 25);
    benchmark::DoNotOptimize(deviation);
  }
}
BENCHMARK(CoSimulation);

}  // namespace

BENCHMARK_MAIN();
