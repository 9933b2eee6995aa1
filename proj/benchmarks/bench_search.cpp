#include <benchmark/benchmark.h>

#include "hbasis/search.hpp"

namespace {

void BM_ExtremalN(benchmark::State& state) {
  const auto h = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const hbasis::SearchResult r = hbasis::extremal_n(h, k);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ExtremalN)->Args({2, 6})->Args({2, 8})->Args({3, 6})->Args({4, 5})
    ->Unit(benchmark::kMillisecond);

void BM_OracleExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hbasis::oracle_exhaustive(2, 5).value);
}
BENCHMARK(BM_OracleExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
