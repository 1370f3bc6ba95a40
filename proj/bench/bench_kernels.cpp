#include <benchmark/benchmark.h>

#include <map>

#include "qmflab/kernels.hpp"

using namespace qmflab;

namespace {

const std::vector<long>& sweep_primes() {
  static const auto ps = kernels::primes_between(5, 101);
  return ps;
}

const std::vector<Rat>& points(long max_den) {
  static std::map<long, std::vector<Rat>> cache;
  auto it = cache.find(max_den);
  if (it == cache.end()) it = cache.emplace(max_den, sample_rationals(64, 1, max_den)).first;
  return it->second;
}

const QForm& weight_ten_form() {
  static const QForm f = psi(reconstruct(basis_U(10, Parity::odd).front(), Rat(0)));
  return f;
}

void BM_CompatSweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::compat_sweep_serial(sweep_primes(), 50, 0));
}
void BM_CompatSweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::compat_sweep(sweep_primes(), 50, 0));
}

void BM_QFormSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::qform_batch_serial(weight_ten_form(), points(10000)));
}
void BM_QFormParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::qform_batch(weight_ten_form(), points(10000)));
}

void BM_FSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::f_batch_serial(points(st.range(0))));
}
void BM_FParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::f_batch(points(st.range(0))));
}

void BM_HeckeSigmaSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::hecke_sigma_batch_serial(st.range(0), points(100)));
}
void BM_HeckeSigmaParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kernels::hecke_sigma_batch(st.range(0), points(100)));
}

}  // namespace

BENCHMARK(BM_CompatSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompatSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QFormSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QFormParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FSerial)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FParallel)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeSigmaSerial)->Arg(5)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeckeSigmaParallel)->Arg(5)->Arg(23)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
