#include <benchmark/benchmark.h>

#include "hbasis/construct.hpp"
#include "hbasis/parallel.hpp"
#include "hbasis/sumset.hpp"

namespace {

// Digit basis of base b for h addends: coverage limit b^h - 1.
void BM_HFoldCoverage(benchmark::State& state) {
  const auto b = static_cast<std::uint64_t>(state.range(0));
  const auto h = static_cast<unsigned>(state.range(1));
  const hbasis::BasisSet set = hbasis::digit_basis(b, h);
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < h; ++i) limit *= b;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbasis::h_fold_coverage(set, h, limit - 1).count());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(limit) *
                          static_cast<std::int64_t>(set.size()) * (h - 1));
}
BENCHMARK(BM_HFoldCoverage)->Args({32, 3})->Args({18, 5})->Args({10, 7})->Unit(benchmark::kMillisecond);

void BM_HFoldCoverageThreads(benchmark::State& state) {
  hbasis::set_max_threads(static_cast<unsigned>(state.range(0)));
  const hbasis::BasisSet set = hbasis::digit_basis(20, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbasis::h_fold_coverage(set, 5, 3'199'999).count());
  }
  hbasis::set_max_threads(1);
}
BENCHMARK(BM_HFoldCoverageThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Witness(benchmark::State& state) {
  const hbasis::BasisSet set = hbasis::digit_basis(16, 4);
  const hbasis::SumsetWitness table(set, 4, 65535);
  std::uint64_t z = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.find(z));
    z = (z + 7919) % 65536;
  }
}
BENCHMARK(BM_Witness);

}  // namespace

BENCHMARK_MAIN();
