#include <benchmark/benchmark.h>

#include "diagthue/analysis.hpp"
#include "diagthue/solver.hpp"
#include "diagthue/thresholds.hpp"

namespace {

using namespace diagthue;

void BM_EnumeratePoints(benchmark::State& state) {
  const DiagForm f(7, 1, 0, 0, 1);
  const SearchConfig cfg{state.range(0), static_cast<unsigned>(state.range(1)), 64};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_points(f.expanded(), 127, cfg));
  }
}
BENCHMARK(BM_EnumeratePoints)->Args({100, 1})->Args({400, 1})->Args({400, 0})->Args({1000, 0});

void BM_ComparePowerProduct(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const PowerProduct main = threshold(ThresholdSpec::main(r, 10));
  const PowerProduct siegel = threshold(ThresholdSpec::siegel(1, r, 10));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_power_product(main, siegel));
  }
}
BENCHMARK(BM_ComparePowerProduct)->Arg(7)->Arg(20)->Arg(50);

// k^42 against 7^{637/2} as exact integers k^84 vs 7^637.
void BM_CompareExact(benchmark::State& state) {
  const PowerProduct delta_prime = PowerProduct::of(Rational(3'000'000), 42);
  const PowerProduct main = threshold(ThresholdSpec::main(7, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_exact(delta_prime, main, 1'000'000));
  }
}
BENCHMARK(BM_CompareExact);

void BM_RelatedRoot(benchmark::State& state) {
  const QuadElem u(Rational(3), Rational(2), -1);
  const QuadElem v(Rational(1), Rational(-1), -1);
  const PrecisionPolicy policy{static_cast<mpfr_prec_t>(state.range(0)), 4096};
  for (auto _ : state) {
    benchmark::DoNotOptimize(related_root(u, v, 9, policy));
  }
}
BENCHMARK(BM_RelatedRoot)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
