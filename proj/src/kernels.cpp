#include "qmflab/kernels.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace qmflab::kernels {

int thread_cap() {
  const int max = omp_get_max_threads();
  const char* env = std::getenv("QMFLAB_THREADS");
  if (!env) return max;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return max;
  return static_cast<int>(std::min<long>(v, max));
}

std::vector<long> primes_between(long lo, long hi) {
  std::vector<long> out;
  for (long p = std::max(lo, 2L); p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace {

// Runs body(i) for i in [0, n) on the capped team; the first exception thrown
// by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr error;
  std::mutex mu;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<CompatReport> compat_sweep_serial(const std::vector<long>& primes, std::size_t spot_checks,
                                              std::uint64_t seed) {
  std::vector<CompatReport> out;
  out.reserve(primes.size());
  for (long p : primes) out.push_back(compat_check(p, spot_checks, seed));
  return out;
}

std::vector<CompatReport> compat_sweep(const std::vector<long>& primes, std::size_t spot_checks, std::uint64_t seed) {
  std::vector<CompatReport> out(primes.size());
  // Largest primes first so the dynamic schedule balances.
  const std::size_t n = primes.size();
  parallel_for(n, [&](std::size_t i) { out[n - 1 - i] = compat_check(primes[n - 1 - i], spot_checks, seed); });
  return out;
}

std::vector<Rat> qform_batch_serial(const QForm& f, const std::vector<Rat>& xs) {
  std::vector<Rat> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(f(x));
  return out;
}

std::vector<Rat> qform_batch(const QForm& f, const std::vector<Rat>& xs) {
  std::vector<Rat> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = f(xs[i]); });
  return out;
}

std::vector<Cplx> f_batch_serial(const std::vector<Rat>& xs, const SigmaOptions& opts) {
  std::vector<Cplx> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(f_eval(x, opts));
  return out;
}

std::vector<Cplx> f_batch(const std::vector<Rat>& xs, const SigmaOptions& opts) {
  std::vector<Cplx> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = f_eval(xs[i], opts); });
  return out;
}

std::vector<Cplx> hecke_sigma_batch_serial(long p, const std::vector<Rat>& xs, const SigmaOptions& opts) {
  std::vector<Cplx> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(hecke_sigma(p, x, opts));
  return out;
}

std::vector<Cplx> hecke_sigma_batch(long p, const std::vector<Rat>& xs, const SigmaOptions& opts) {
  std::vector<Cplx> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { out[i] = hecke_sigma(p, xs[i], opts); });
  return out;
}

}  // namespace qmflab::kernels
