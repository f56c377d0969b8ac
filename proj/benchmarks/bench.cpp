#include <benchmark/benchmark.h>

#include <random>

#include "tvoronoi/constructions.hpp"
#include "tvoronoi/explorer.hpp"
#include "tvoronoi/reachability.hpp"
#include "tvoronoi/voronoi.hpp"

namespace {

using namespace tvoronoi;

TemporalGraph random_graph(std::size_t n, std::size_t tau, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<EdgeSet> layers(tau);
  for (auto& layer : layers) {
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (keep(rng)) layer.push_back({u, v});
      }
    }
  }
  return TemporalGraph(n, std::move(layers));
}

void BM_AllPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = random_graph(n, 8, 4.0 / static_cast<double>(n), 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairs)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_EnumerateNash(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const VoronoiGame game(random_graph(n, 4, 3.0 / static_cast<double>(n), 2), GameKind::rvor);
  for (auto _ : state) benchmark::DoNotOptimize(game.enumerate_nash());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateNash)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_GridDynamics(benchmark::State& state) {
  const VoronoiGame game(build_instance("vor_grow_grid_12").graph, GameKind::vor);
  for (auto _ : state) benchmark::DoNotOptimize(game.best_response_dynamics({1, 1}, 1000));
}
BENCHMARK(BM_GridDynamics);

void BM_CycleSweep(benchmark::State& state) {
  FamilySpec spec;
  spec.base_class = ClassKind::cycle;
  spec.n_min = 3;
  spec.n_max = static_cast<std::size_t>(state.range(0));
  spec.tau_min = 1;
  spec.tau_max = 3;
  spec.max_edge_changes = 2;
  const GameKind kinds[] = {GameKind::vor, GameKind::rvor};
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec, kinds, {}, 1));
}
BENCHMARK(BM_CycleSweep)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
