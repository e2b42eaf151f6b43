#include <benchmark/benchmark.h>

#include <vector>

#include "stirsum/bigreal.hpp"
#include "stirsum/kernels.hpp"
#include "stirsum/rational.hpp"

namespace {

using namespace stirsum;

std::vector<Rational> harmonic_like(long n) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n));
  for (long l = 1; l <= n; ++l) out.emplace_back(l % 2 == 0 ? -1 : 1, l + 1);
  return out;
}

template <auto Kernel>
void BM_weniger(benchmark::State& state) {
  const long k = state.range(0);
  const auto inner = harmonic_like(k);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(inner, 1, k));
  state.SetComplexityN(k);
}

template <auto Kernel>
void BM_sum_real(benchmark::State& state) {
  const long n = state.range(0);
  const Precision p = Precision::digits(400);
  const kernels::RealTerm f = [](long k, BigReal& out) {
    out = BigReal(1, out.precision());
    out /= k;
    out /= k;
  };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(1, n, f, p));
  state.SetItemsProcessed(state.iterations() * n);
}

template <auto Kernel>
void BM_sum_rational(benchmark::State& state) {
  const long n = state.range(0);
  const kernels::RationalTerm f = [](long k) { return Rational(1, k * k); };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(1, n, f));
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_weniger<kernels::weniger_block_serial>)->Name("weniger/serial")->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_weniger<kernels::weniger_block_parallel>)->Name("weniger/parallel")->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sum_real<kernels::sum_real_serial>)->Name("sum_real/serial")->Arg(10000)->Arg(200000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sum_real<kernels::sum_real_parallel>)->Name("sum_real/parallel")->Arg(10000)->Arg(200000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sum_rational<kernels::sum_rational_serial>)->Name("sum_rational/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_sum_rational<kernels::sum_rational_parallel>)->Name("sum_rational/parallel")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
