#include <benchmark/benchmark.h>

#include "hbasis/sidon.hpp"

namespace {

void BM_BoseChowla(benchmark::State& state, hbasis::DiscreteLogMethod method) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hbasis::bose_chowla(p, k, method).elements.size());
}
BENCHMARK_CAPTURE(BM_BoseChowla, power_walk, hbasis::DiscreteLogMethod::kPowerWalk)
    ->Args({101, 2})->Args({31, 3})->Args({13, 5})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BoseChowla, baby_giant, hbasis::DiscreteLogMethod::kBabyGiant)
    ->Args({101, 2})->Args({31, 3})->Args({13, 5})->Args({1009, 3})->Unit(benchmark::kMillisecond);

void BM_PhiExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hbasis::phi_exact(n, 2).size);
}
BENCHMARK(BM_PhiExact)->Arg(30)->Arg(45)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
