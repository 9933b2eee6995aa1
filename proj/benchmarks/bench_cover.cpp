#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "hbasis/cover.hpp"

namespace {

hbasis::ResidueSet random_residues(std::uint64_t q, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> s;
  while (s.size() < size) s.insert(rng() % q);
  const std::vector<std::uint64_t> v(s.begin(), s.end());
  return hbasis::ResidueSet(q, v);
}

void BM_GreedyShiftCover(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto a = random_residues(q, static_cast<std::size_t>(state.range(1)), 1);
  const auto b = hbasis::ResidueSet::full(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbasis::greedy_shift_cover(a, b, q).shifts.size());
  }
}
BENCHMARK(BM_GreedyShiftCover)->Args({1024, 32})->Args({16384, 128})->Args({65536, 256})
    ->Unit(benchmark::kMillisecond);

void BM_KComplement(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto k = static_cast<unsigned>(state.range(1));
  const auto a = random_residues(q, 64, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbasis::k_complement(a, k).total_shifts);
  }
}
BENCHMARK(BM_KComplement)->Args({4096, 1})->Args({4096, 2})->Args({4096, 3})->Args({32768, 2})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
