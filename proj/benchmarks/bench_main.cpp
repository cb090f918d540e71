#include <benchmark/benchmark.h>

#include <random>

#include "ringcodes/ringcodes.hpp"

using namespace ringcodes;

namespace {

LinearCode near_mds_z125() {
  return LinearCode::from_generators(ChainRing::integers_mod(5, 3), 4, {{1, 0, 57, 0}, {0, 1, 0, 68}});
}

RingMatrix random_matrix(const ChainRing& R, std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RingMatrix m(R, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<ChainRing::Value>(rng() % R.size());
  return m;
}

void BM_WeightDistribution(benchmark::State& state) {
  const auto code = near_mds_z125();
  const EnumerationOptions opts{default_enumeration_cap(), static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, opts));
  state.SetItemsProcessed(state.iterations() * 15625);
}
BENCHMARK(BM_WeightDistribution)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_WeightDistributionLarge(benchmark::State& state) {
  // 4^10 codewords over Z/4.
  const auto g = random_matrix(ChainRing::integers_mod(2, 2), 10, 16, 3);
  const auto code = LinearCode::from_matrix(g);
  const EnumerationOptions opts{default_enumeration_cap(), static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, opts));
}
BENCHMARK(BM_WeightDistributionLarge)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_StandardForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(ChainRing::integers_mod(2, 3), n / 2, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(standard_form(m));
}
BENCHMARK(BM_StandardForm)->RangeMultiplier(2)->Range(8, 128);

void BM_StandardFormPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(ChainRing::truncated_poly(3, 3), n / 2, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(standard_form(m));
}
BENCHMARK(BM_StandardFormPoly)->RangeMultiplier(2)->Range(8, 128);

void BM_SubmatrixTypes(benchmark::State& state) {
  const auto code = LinearCode::from_matrix(random_matrix(ChainRing::integers_mod(3, 2), 6, 14, 9));
  const auto& h = code.parity_check();
  const SubsetOptions opts{1'000'000, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(count_submatrix_types(h, 7, opts));
}
BENCHMARK(BM_SubmatrixTypes)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_SolveDistribution(benchmark::State& state) {
  const auto code = near_mds_z125();
  const auto ctx = IdentityContext::of(code, 2, 2);
  const KnownWeights known{{2, 248}};
  for (auto _ : state) benchmark::DoNotOptimize(solve_distribution(ctx, known));
}
BENCHMARK(BM_SolveDistribution);

}  // namespace
BENCHMARK_MAIN();
