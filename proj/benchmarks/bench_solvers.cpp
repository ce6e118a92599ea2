#include <benchmark/benchmark.h>

#include "effdom/effdom.hpp"
#include "generators.hpp"

namespace {

using namespace effdom;

WeightedGraph windmill(int blades) {
  std::vector<Edge> e;
  for (int i = 0; i < blades; ++i) {
    e.emplace_back(0, 2 * i + 1);
    e.emplace_back(0, 2 * i + 2);
    e.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return WeightedGraph::from_edges(2 * blades + 1, e);
}

void BM_2p2_spider(benchmark::State& state) {
  testing::Rng rng(1);
  const auto s = testing::thin_spider(static_cast<int>(state.range(0)) / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_2p2(s.graph));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_2p2_spider)->RangeMultiplier(2)->Range(250, 4000)->Complexity();

void BM_p5_spider(benchmark::State& state) {
  testing::Rng rng(2);
  const auto s = testing::thin_spider(static_cast<int>(state.range(0)) / 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(run_robust(s.graph, candidate_p5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_p5_spider)->RangeMultiplier(2)->Range(100, 1600)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNCubed);

void BM_p5_windmill(benchmark::State& state) {
  const auto g = windmill(static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_robust(g, candidate_p5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_p5_windmill)->RangeMultiplier(2)->Range(500, 8000)->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_p6s122_windmill(benchmark::State& state) {
  const auto g = windmill(static_cast<int>(state.range(0)) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(run_robust(g, candidate_p6s122));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_p6s122_windmill)->RangeMultiplier(2)->Range(500, 4000)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

// Direct procedure against the square-of-a-cograph route on split graphs.
void BM_p5_split(benchmark::State& state) {
  testing::Rng rng(3);
  const int half = static_cast<int>(state.range(0)) / 2;
  const auto g = testing::random_split(half, half, 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(run_robust(g, candidate_p5));
}
BENCHMARK(BM_p5_split)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_p5_square_split(benchmark::State& state) {
  testing::Rng rng(3);
  const int half = static_cast<int>(state.range(0)) / 2;
  const auto g = testing::random_split(half, half, 0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_p5_square(g));
}
BENCHMARK(BM_p5_square_split)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_kbwed_cycle(benchmark::State& state) {
  const auto c = testing::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_kbwed(c, 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_kbwed_cycle)->RangeMultiplier(4)->Range(300, 76800)->Complexity(benchmark::oN);

void BM_exact_cover_random(benchmark::State& state) {
  testing::Rng rng(4);
  const auto g = testing::planted_ed(static_cast<int>(state.range(0)), 6, 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_cover_ed(g));
}
BENCHMARK(BM_exact_cover_random)->Arg(20)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
