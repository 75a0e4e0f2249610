#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "hybridcomb/hybridcomb.hpp"

namespace hc = hybridcomb;

namespace {

hc::TwoSpeciesParams two_species() {
  hc::TwoSpeciesParams p;
  p.w0 = -5.0;
  p.w1 = 0.3;
  p.v0 = -6.0;
  p.v1 = -0.4;
  p.d = 1.0 / 3.0;
  return p;
}

void BM_SecularOneSpecies(benchmark::State& state) {
  const hc::OneSpeciesParams p{-5.0, 0.5, 1.0};
  double eps = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hc::secular_one_species(eps, p));
    eps = eps < 100.0 ? eps + 0.37 : -10.0;
  }
}
BENCHMARK(BM_SecularOneSpecies);

void BM_SecularTwoSpecies(benchmark::State& state) {
  const auto p = two_species();
  double eps = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hc::secular_two_species(eps, p));
    eps = eps < 100.0 ? eps + 0.37 : -10.0;
  }
}
BENCHMARK(BM_SecularTwoSpecies);

void BM_MonodromyTwoSpecies(benchmark::State& state) {
  const auto p = two_species();
  double eps = -10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hc::monodromy_two_species(eps, p));
    eps = eps < 100.0 ? eps + 0.37 : -10.0;
  }
}
BENCHMARK(BM_MonodromyTwoSpecies);

// Band enumeration over a window holding state.range(0) bands.
void BM_EnumerateBands(benchmark::State& state) {
  const hc::CombParams p = hc::OneSpeciesParams{-5.0, 0.5, 1.0};
  const double n = static_cast<double>(state.range(0));
  const double eps_max = std::pow(n * std::numbers::pi, 2);
  const double eps_min = hc::default_eps_min(p);
  for (auto _ : state) benchmark::DoNotOptimize(hc::enumerate_bands(p, eps_min, eps_max));
}
BENCHMARK(BM_EnumerateBands)->Arg(4)->Arg(16)->Arg(64);

void BM_DosBandIntegral(benchmark::State& state) {
  const hc::CombParams p = two_species();
  const auto bands = hc::enumerate_bands(p, hc::default_eps_min(p), 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(hc::dos_band_integral(bands.front(), p));
}
BENCHMARK(BM_DosBandIntegral);

}  // namespace

BENCHMARK_MAIN();
