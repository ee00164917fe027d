// Compares the OpenMP kernels against their serial reference
// implementations. Run with GRAPHON_SAMPLE_THREADS to pin the worker count.

#include <benchmark/benchmark.h>

#include <vector>

#include "gsp/graph.hpp"
#include "gsp/local_cluster.hpp"
#include "gsp/pipeline.hpp"
#include "gsp/rng.hpp"
#include "gsp/threads.hpp"

namespace {

gsp::Graph random_graph(int n, double p, std::uint64_t seed) {
  gsp::Rng rng(seed);
  std::vector<gsp::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.push_back({i, j, 1.0});
  return gsp::build_graph(edges, n);
}

void bm_coarsen_parallel(benchmark::State& state) {
  gsp::Graph g = random_graph(int(state.range(0)), 0.02, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gsp::coarsen(g, 20));
}

void bm_coarsen_serial(benchmark::State& state) {
  gsp::Graph g = random_graph(int(state.range(0)), 0.02, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gsp::coarsen_serial(g, 20));
}

void bm_hkpr_parallel(benchmark::State& state) {
  gsp::Graph g = random_graph(500, 0.05, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gsp::heat_kernel_pagerank(g, {0}, 5.0, state.range(0), 7));
}

void bm_hkpr_serial(benchmark::State& state) {
  gsp::Graph g = random_graph(500, 0.05, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(gsp::heat_kernel_pagerank_serial(g, {0}, 5.0, state.range(0), 7));
}

}  // namespace

BENCHMARK(bm_coarsen_serial)->Arg(1000)->Arg(4000)->Arg(8000);
BENCHMARK(bm_coarsen_parallel)->Arg(1000)->Arg(4000)->Arg(8000);
BENCHMARK(bm_hkpr_serial)->Arg(10000)->Arg(50000);
BENCHMARK(bm_hkpr_parallel)->Arg(10000)->Arg(50000);

int main(int argc, char** argv) {
  gsp::apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
