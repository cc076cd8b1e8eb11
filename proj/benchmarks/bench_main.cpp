#include <benchmark/benchmark.h>

#include "mcnum/classifier.hpp"
#include "mcnum/graph6.hpp"
#include "mcnum/minor.hpp"
#include "mcnum/solver.hpp"

namespace {

using mcnum::Graph;

// Octahedron, cube Q3, Petersen, icosahedron, K_{3,3,3}.
const char* const kGraphs[] = {"E}lw", "Gr`HOk", "IheA@GUAo", "KhFKFCrEk[n_", "HFzf~z{"};

Graph graph_at(int i) { return mcnum::parse_graph6(kGraphs[i]); }

void BM_MCExact(benchmark::State& state) {
  const Graph g = graph_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcnum::mc_exact(g).mc);
}
BENCHMARK(BM_MCExact)->DenseRange(0, 2);

void BM_Classify(benchmark::State& state) {
  const Graph g = graph_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcnum::classify(g).kappa);
}
BENCHMARK(BM_Classify)->DenseRange(0, 4);

void BM_HasK5Minor(benchmark::State& state) {
  const Graph g = graph_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcnum::has_minor(g, mcnum::MinorTarget::K5));
}
BENCHMARK(BM_HasK5Minor)->DenseRange(0, 4);

}  // namespace

BENCHMARK_MAIN();
