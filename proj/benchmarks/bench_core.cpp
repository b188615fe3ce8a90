#include <benchmark/benchmark.h>

#include <bicycle/bicycle.hpp>

using namespace bicycle;

namespace {

Subspace pedestrian(std::size_t n, std::size_t k, std::uint64_t seed) {
  for (std::uint64_t i = 0;; ++i) {
    Subspace v = random_subspace(n, k, mix_seed(seed, i));
    if (bicycle_dimension(v) == 0) return v;
  }
}

void BM_QBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const Subspace v = random_subspace(n, k, 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_q_basis(v));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(k));
}
BENCHMARK(BM_QBasis)->Args({10000, 125})->Args({10000, 250})->Args({10000, 500})->Args({10000, 1000})
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

void BM_Evaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Subspace v = random_subspace(n, n / 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(v));
}
BENCHMARK(BM_Evaluate)->Arg(30)->Arg(300)->Arg(3000)->Unit(benchmark::kMicrosecond);

void BM_BruteForceTutte(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Subspace v = random_subspace(n, n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_tutte_at_point(v));
}
BENCHMARK(BM_BruteForceTutte)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

void BM_Projector(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Subspace v = pedestrian(n, n / 4, 4);
  const QBasis qb = compute_q_basis(v);
  for (auto _ : state) benchmark::DoNotOptimize(projector(qb));
}
BENCHMARK(BM_Projector)->Arg(200)->Arg(800)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const Subspace v = random_subspace(30, 10, 5);
  for (auto _ : state) benchmark::DoNotOptimize(profile(v));
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
