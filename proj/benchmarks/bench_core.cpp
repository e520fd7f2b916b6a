#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ztau/ztau.hpp"

namespace {

using namespace ztau;
using MI = MultiIndex;

MI random_index(std::mt19937_64& rng, int coords, int lo, int hi) {
  std::uniform_int_distribution<int> coord(1, coords), exp(lo, hi);
  std::vector<MI::Entry> e;
  for (int i = 0; i < 4; ++i) e.emplace_back(static_cast<MI::Coordinate>(coord(rng)), exp(rng));
  return MI::from_entries(std::move(e));
}

FourierSeries random_series(std::mt19937_64& rng, int terms) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries f;
  for (int i = 0; i < terms; ++i) f.add_term(random_index(rng, 6, -4, 4), {u(rng), u(rng)});
  return f;
}

void BM_Compare(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<MI> xs;
  for (int i = 0; i < 1024; ++i) xs.push_back(random_index(rng, 12, -6, 6));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare(xs[i % 1024], xs[(i + 1) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Compare);

void BM_Multiply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto f = random_series(rng, static_cast<int>(state.range(0)));
  auto g = random_series(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(8, 512);

void BM_Evaluate(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto f = random_series(rng, static_cast<int>(state.range(0)));
  DiskPoint pt(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(f, pt));
}
BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(8, 512);

void BM_SzegoSection(benchmark::State& state) {
  auto w = Weight::from_polynomial(FourierSeries::constant(1.0) + FourierSeries::character(MI::unit(1), -0.5));
  std::vector<MI> s;
  for (int k = 1; k <= state.range(0); ++k) s.push_back(MI::unit(1, k));
  for (auto _ : state) benchmark::DoNotOptimize(szego_infimum(w, s, SectionMode::ZplusSection).value);
}
BENCHMARK(BM_SzegoSection)->RangeMultiplier(2)->Range(4, 64);

void BM_OuterFactor(benchmark::State& state) {
  auto w = Weight::from_polynomial(FourierSeries::constant(1.0) + FourierSeries::character(MI::unit(1), -0.5) +
                                   FourierSeries::character(MI::unit(2), 0.25));
  for (auto _ : state) benchmark::DoNotOptimize(outer_factor(w).factor.size());
}
BENCHMARK(BM_OuterFactor);

}  // namespace

BENCHMARK_MAIN();
