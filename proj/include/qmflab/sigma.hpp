#pragma once

// Ramanujan's sigma(q) = sum q^(n(n+1)/2) / ((1+q)...(1+q^n)) and the quantum
// modular form f(x) = q^(1/24) sigma(q), q = e^(2 pi i x), evaluated at roots of
// unity through the Andrews form
//   sigma(q) = 1 + sum_{n>=0} (-1)^n q^(n+1) (1-q)(1-q^2)...(1-q^n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmflab/exactnum.hpp"

namespace qmflab {

struct SigmaOptions {
  long max_den = 1'000'000;  // largest h accepted per evaluation
};

/// Which arithmetic sigma_at_root used, and at what precision.
struct SigmaTrace {
  bool multiprecision = false;
  long bits = 53;
  double log_peak = 0.0;  // max_n log prod_{j<=n} |1 - q^j|
};

/// sigma(e^(2 pi i k/h)). The partial products can grow like e^(0.16 a), a the
/// largest continued-fraction quotient of k/h; when they do, the sum is
/// carried out in MPFR with enough guard bits to absorb the cancellation.
/// Throws std::domain_error if h <= 0 or h > opts.max_den.
Cplx sigma_at_root(const Int& k, const Int& h, const SigmaOptions& opts = {}, SigmaTrace* trace = nullptr);

/// f(x) = e^(2 pi i x/24) sigma(e^(2 pi i x)).
Cplx f_eval(const Rat& x, const SigmaOptions& opts = {});

/// Formal coefficients of both series through q^N.
struct SeriesCheck {
  int order = 0;
  std::vector<Int> hypergeometric;
  std::vector<Int> andrews;
  std::optional<int> first_mismatch;
  bool pass() const { return !first_mismatch; }
};

SeriesCheck series_identity_check(int order);

/// g(x) = (-1)^((p^2-1)/24) f(p x) + (1/p) sum_j zeta24^(-p j) f((x + j)/p).
/// Runs (and caches) compat_check(p) first; throws std::domain_error if it
/// fails or p is not a prime >= 5.
Cplx hecke_sigma(long p, const Rat& x, const SigmaOptions& opts = {});

struct HeckeSigmaValue {
  Cplx value;
  /// |f(p x)| + (1/p) sum_j |f((x + j)/p)|: the size of the terms that cancel,
  /// the reference magnitude for the error of `value`.
  double scale = 0.0;
};

HeckeSigmaValue hecke_sigma_detail(long p, const Rat& x, const SigmaOptions& opts = {});

/// With f = sum_N c(N) q^(N/24) as a formal series, T_p f has coefficients
/// b(M) = c(p M) + (-1)^((p^2-1)/24) c(M/p), M = p mod 24.
struct FormalHeckeImage {
  long p = 0;
  long max_M = 0;  // coefficients checked for M <= max_M
  std::vector<std::pair<long, Int>> nonzero;  // (M, b(M)) with b(M) != 0
  bool vanishes() const { return nonzero.empty(); }
  /// lambda with b(M) = lambda c(M) for every M, when p = 1 mod 24 and such a
  /// lambda exists.
  std::optional<Rat> eigenvalue;
};

/// Uses the hypergeometric series to order `order` (so M runs up to about
/// 24 order / p).
FormalHeckeImage formal_hecke_sigma(long p, int order);

struct ProbeChain {
  Rat base;
  bool near_singular = false;
  std::string note;
  std::vector<Rat> xs;
  std::vector<Cplx> values;  // cocycle values at xs
  std::vector<double> diffs;  // |h(x_m) - h(x_{m-1})|
  bool decreasing() const;
};

struct ProbeReport {
  std::optional<long> p;
  std::vector<ProbeChain> chains;
  bool pass() const;  // every chain that is not near-singular decreases
};

struct ProbeConfig {
  int m_min = 2;
  int m_max = 5;
  std::vector<Rat> bases;  // empty: the default ten base points plus -0.4999
  SigmaOptions sigma;
};

/// Default base points: +-1/10, -1/5, 1/5, +-3/10, +-7/10, +-9/10, and the
/// near-singular -4999/10000.
std::vector<Rat> default_probe_bases();

/// Samples h(x) = |2x+1|^-1 F(x/(2x+1)) - zeta24^e F(x) along x_m = x0 + 10^-m,
/// with F = f, e = 1 when p is empty and F = hecke_sigma(p, .), e = p otherwise.
/// Base points within 1/100 of -1/2 are flagged and skipped.
ProbeReport cocycle_probe(std::optional<long> p, const ProbeConfig& config = {});

/// The cocycle value at a single point.
Cplx cocycle_value(std::optional<long> p, const Rat& x, const SigmaOptions& opts = {});

}  // namespace qmflab
