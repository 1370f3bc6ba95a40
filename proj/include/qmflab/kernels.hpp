#pragma once

// Batch kernels with an OpenMP version and a serial reference each. The
// parallel versions honour QMFLAB_THREADS as an upper bound on the team size.

#include <vector>

#include "qmflab/modgroup.hpp"
#include "qmflab/qmf.hpp"
#include "qmflab/sigma.hpp"

namespace qmflab::kernels {

/// min(omp_get_max_threads(), QMFLAB_THREADS) when the variable is a positive
/// integer, omp_get_max_threads() otherwise.
int thread_cap();

std::vector<long> primes_between(long lo, long hi);

std::vector<CompatReport> compat_sweep_serial(const std::vector<long>& primes, std::size_t spot_checks, std::uint64_t seed);
std::vector<CompatReport> compat_sweep(const std::vector<long>& primes, std::size_t spot_checks, std::uint64_t seed);

std::vector<Rat> qform_batch_serial(const QForm& f, const std::vector<Rat>& xs);
std::vector<Rat> qform_batch(const QForm& f, const std::vector<Rat>& xs);

std::vector<Cplx> f_batch_serial(const std::vector<Rat>& xs, const SigmaOptions& opts = {});
std::vector<Cplx> f_batch(const std::vector<Rat>& xs, const SigmaOptions& opts = {});

std::vector<Cplx> hecke_sigma_batch_serial(long p, const std::vector<Rat>& xs, const SigmaOptions& opts = {});
std::vector<Cplx> hecke_sigma_batch(long p, const std::vector<Rat>& xs, const SigmaOptions& opts = {});

}  // namespace qmflab::kernels
