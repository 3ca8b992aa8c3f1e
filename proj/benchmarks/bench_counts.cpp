#include <benchmark/benchmark.h>

#include "lpm/combinatorics.hpp"
#include "lpm/series.hpp"
#include "lpm/tableau.hpp"
#include "lpm/walks.hpp"

namespace {

using namespace lpm;

// Arguments: n, r, d.
void BM_SignedSumDp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const int d = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(signed_sum(n, r, d, Family::w_prime, Counter::dp));
}
BENCHMARK(BM_SignedSumDp)->Args({8, 1, 4})->Args({4, 2, 4})->Args({2, 3, 3})->Args({12, 1, 5})->Args({6, 3, 6});

void BM_SignedSumEnumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  const int d = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(signed_sum(n, r, d, Family::w_prime, Counter::enumerate));
}
BENCHMARK(BM_SignedSumEnumerate)->Args({8, 1, 4})->Args({4, 2, 4})->Args({2, 3, 3});

void BM_CountGBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_g_brute(n, r, r * n / 2));
}
BENCHMARK(BM_CountGBrute)->Args({8, 1})->Args({4, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_TableauPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_pairs_with_condition(n, r, r * n / 2, RowCondition::strictly_above));
  }
}
BENCHMARK(BM_TableauPairs)->Args({8, 1})->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_Rsk(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto pi = sample_configuration(m, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rsk(pi));
  state.SetComplexityN(m);
}
BENCHMARK(BM_Rsk)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_MatchingProfile(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto pi = sample_configuration(m, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(planar_matching_profile(pi));
  state.SetComplexityN(m);
}
BENCHMARK(BM_MatchingProfile)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_ConditionCSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_condition_C_walk(n, r, r * n, [&](const Walk&, const Permutation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ConditionCSearch)->Args({7, 1})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_BesselDeterminant(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::vector<std::vector<RationalSeries>> m;
    for (int i = 0; i < d; ++i) {
      auto& row = m.emplace_back();
      for (int j = 0; j < d; ++j) row.push_back(bessel_I_series(i > j ? i - j : j - i, 16));
    }
    benchmark::DoNotOptimize(determinant(m));
  }
}
BENCHMARK(BM_BesselDeterminant)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
