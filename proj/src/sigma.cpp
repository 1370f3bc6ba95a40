#include "qmflab/sigma.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qmflab/modgroup.hpp"

namespace qmflab {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr operator*() { return v_; }

 private:
  mpfr_t v_;
};

struct Complex {
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Real re, im;
};

// out = x * y; out must not alias x or y.
void cmul(Complex& out, Complex& x, Complex& y) {
  mpfr_fmms(*out.re, *x.re, *y.re, *x.im, *y.im, MPFR_RNDN);
  mpfr_fmma(*out.im, *x.re, *y.im, *x.im, *y.re, MPFR_RNDN);
}

void cswap(Complex& a, Complex& b) {
  mpfr_swap(*a.re, *b.re);
  mpfr_swap(*a.im, *b.im);
}

Cplx andrews_double(long k, long h) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(h);
  Cplx prod(1.0, 0.0);
  Cplx sum(0.0, 0.0);
  for (long n = 0; n < h; ++n) {
    const long r = ((n + 1) * k) % h;
    const Cplx qn = std::polar(1.0, step * static_cast<double>(r));
    const Cplx term = qn * prod;
    sum += (n % 2 == 0) ? term : -term;
    prod *= Cplx(1.0, 0.0) - qn;
  }
  return Cplx(1.0, 0.0) + sum;
}

Cplx andrews_mpfr(long k, long h, mpfr_prec_t prec) {
  Complex q(prec), qn(prec), prod(prec), sum(prec), term(prec), tmp(prec), factor(prec);
  Real theta(prec);
  mpfr_const_pi(*theta, MPFR_RNDN);
  mpfr_mul_si(*theta, *theta, 2 * k, MPFR_RNDN);
  mpfr_div_si(*theta, *theta, h, MPFR_RNDN);
  mpfr_sin_cos(*q.im, *q.re, *theta, MPFR_RNDN);
  mpfr_set(*qn.re, *q.re, MPFR_RNDN);
  mpfr_set(*qn.im, *q.im, MPFR_RNDN);
  mpfr_set_ui(*prod.re, 1, MPFR_RNDN);
  mpfr_set_ui(*prod.im, 0, MPFR_RNDN);
  mpfr_set_ui(*sum.re, 0, MPFR_RNDN);
  mpfr_set_ui(*sum.im, 0, MPFR_RNDN);
  for (long n = 0; n < h; ++n) {
    cmul(term, qn, prod);
    if (n % 2 == 0) {
      mpfr_add(*sum.re, *sum.re, *term.re, MPFR_RNDN);
      mpfr_add(*sum.im, *sum.im, *term.im, MPFR_RNDN);
    } else {
      mpfr_sub(*sum.re, *sum.re, *term.re, MPFR_RNDN);
      mpfr_sub(*sum.im, *sum.im, *term.im, MPFR_RNDN);
    }
    mpfr_ui_sub(*factor.re, 1, *qn.re, MPFR_RNDN);
    mpfr_neg(*factor.im, *qn.im, MPFR_RNDN);
    cmul(tmp, prod, factor);
    cswap(prod, tmp);
    cmul(tmp, qn, q);
    cswap(qn, tmp);
  }
  mpfr_add_ui(*sum.re, *sum.re, 1, MPFR_RNDN);
  return {mpfr_get_d(*sum.re, MPFR_RNDN), mpfr_get_d(*sum.im, MPFR_RNDN)};
}

// max over n of log prod_{j<=n} |1 - q^j|, from exact angles.
double log_peak(long k, long h) {
  double acc = 0.0, peak = 0.0;
  for (long j = 1; j < h; ++j) {
    const long r = (j * k) % h;
    acc += std::log(2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>(r) / static_cast<double>(h))));
    peak = std::max(peak, acc);
  }
  return peak;
}

}  // namespace

Cplx sigma_at_root(const Int& k, const Int& h, const SigmaOptions& opts, SigmaTrace* trace) {
  if (sgn(h) <= 0) throw std::domain_error("sigma_at_root: h must be positive");
  const Rat x = rat_normalize(k, h);
  const Int& den = x.get_den();
  if (den > opts.max_den)
    throw std::domain_error("sigma_at_root: denominator " + den.get_str() + " exceeds the cap " +
                            std::to_string(opts.max_den));
  const long hh = den.get_si();
  const long kk = mod_floor(x.get_num(), den).get_si();

  const double peak = log_peak(kk, hh);
  const double growth_bits = peak / std::numbers::ln2 + std::log2(static_cast<double>(hh));
  SigmaTrace local;
  local.log_peak = peak;
  Cplx value;
  if (growth_bits <= 10.0) {
    value = andrews_double(kk, hh);
  } else {
    local.multiprecision = true;
    local.bits = 64 + static_cast<long>(std::ceil(growth_bits)) + 16;
    value = andrews_mpfr(kk, hh, local.bits);
  }
  if (trace) *trace = local;
  return value;
}

Cplx f_eval(const Rat& x, const SigmaOptions& opts) {
  const Int& k = x.get_num();
  const Int& h = x.get_den();
  const Int period = 24 * h;
  const Int r = mod_floor(k, period);
  const double turn = Rat(r, period).get_d();
  return std::polar(1.0, 2.0 * std::numbers::pi * turn) * sigma_at_root(k, h, opts);
}

SeriesCheck series_identity_check(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  const auto N = static_cast<std::size_t>(order);
  SeriesCheck out;
  out.order = order;

  // sum_n q^(n(n+1)/2) / prod_{j<=n} (1 + q^j)
  out.hypergeometric.assign(N + 1, Int(0));
  for (std::size_t n = 0; n * (n + 1) / 2 <= N; ++n) {
    std::vector<Int> term(N + 1, Int(0));
    term[n * (n + 1) / 2] = 1;
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t i = j; i <= N; ++i) term[i] -= term[i - j];
    for (std::size_t i = 0; i <= N; ++i) out.hypergeometric[i] += term[i];
  }

  // 1 + sum_n (-1)^n q^(n+1) prod_{j<=n} (1 - q^j)
  out.andrews.assign(N + 1, Int(0));
  out.andrews[0] = 1;
  std::vector<Int> prod(N + 1, Int(0));
  prod[0] = 1;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    if (n > 0)
      for (std::size_t i = N; i >= n; --i) prod[i] -= prod[i - n];
    for (std::size_t i = 0; i + n + 1 <= N; ++i) {
      if (n % 2 == 0)
        out.andrews[i + n + 1] += prod[i];
      else
        out.andrews[i + n + 1] -= prod[i];
    }
  }

  for (std::size_t i = 0; i <= N; ++i) {
    if (out.hypergeometric[i] != out.andrews[i]) {
      out.first_mismatch = static_cast<int>(i);
      break;
    }
  }
  return out;
}

namespace {

void require_compat(long p) {
  static std::mutex mu;
  static std::map<long, bool> cache;
  if (p < 5 || !is_prime(p)) throw std::domain_error("hecke_sigma needs a prime p >= 5");
  bool ok;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, compat_check(p).pass()).first;
    ok = it->second;
  }
  if (!ok) throw std::domain_error("chi and chi^" + std::to_string(p) + " are not compatible");
}

}  // namespace

HeckeSigmaValue hecke_sigma_detail(long p, const Rat& x, const SigmaOptions& opts) {
  require_compat(p);
  const double sign = ((p * p - 1) / 24) % 2 == 0 ? 1.0 : -1.0;
  Cplx inner;
  double inner_size = 0.0;
  for (long j = 0; j < p; ++j) {
    const Cplx v = f_eval((x + j) / p, opts);
    inner += zeta_to_cplx(Zeta24(-p * j)) * v;
    inner_size += std::abs(v);
  }
  const Cplx outer = f_eval(x * p, opts);
  const auto dp = static_cast<double>(p);
  return {sign * outer + inner / dp, std::abs(outer) + inner_size / dp};
}

Cplx hecke_sigma(long p, const Rat& x, const SigmaOptions& opts) { return hecke_sigma_detail(p, x, opts).value; }

FormalHeckeImage formal_hecke_sigma(long p, int order) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("formal_hecke_sigma needs a prime p >= 5");
  const auto series = series_identity_check(order);
  const auto& a = series.hypergeometric;
  // c(N) = a_n for N = 24 n + 1, zero otherwise
  auto c = [&](long N) -> Int {
    if (N <= 0 || (N - 1) % 24 != 0) return Int(0);
    return a[static_cast<std::size_t>((N - 1) / 24)];
  };
  const long eps = ((p * p - 1) / 24) % 2 == 0 ? 1 : -1;
  FormalHeckeImage out;
  out.p = p;
  std::optional<Rat> lambda;
  bool proportional = p % 24 == 1;
  for (long M = p; p * M <= 24L * order + 1; M += 24) {
    const Int b = c(p * M) + eps * (M % p == 0 ? c(M / p) : Int(0));
    out.max_M = M;
    if (b != 0) out.nonzero.emplace_back(M, b);
    if (!proportional) continue;
    const Int cm = c(M);
    if (cm == 0) {
      proportional = b == 0;
      continue;
    }
    const Rat r = rat_normalize(b, cm);
    if (!lambda) lambda = r;
    else if (*lambda != r) proportional = false;
  }
  if (proportional && lambda) out.eigenvalue = lambda;
  if (out.vanishes()) out.eigenvalue = Rat(0);
  return out;
}

Cplx cocycle_value(std::optional<long> p, const Rat& x, const SigmaOptions& opts) {
  const Rat den = 2 * x + 1;
  if (sgn(den) == 0) throw std::domain_error("cocycle_value: x = -1/2");
  auto F = [&](const Rat& y) { return p ? hecke_sigma(*p, y, opts) : f_eval(y, opts); };
  const Zeta24 z(p ? *p : 1);
  return F(x / den) / std::abs(den.get_d()) - zeta_to_cplx(z) * F(x);
}

bool ProbeChain::decreasing() const {
  for (std::size_t i = 1; i < diffs.size(); ++i)
    if (!(diffs[i] < diffs[i - 1])) return false;
  return true;
}

bool ProbeReport::pass() const {
  for (const auto& c : chains)
    if (!c.near_singular && !c.decreasing()) return false;
  return true;
}

std::vector<Rat> default_probe_bases() {
  return {Rat(-9, 10), Rat(-7, 10), Rat(-3, 10), Rat(-1, 5), Rat(-1, 10), Rat(1, 10),
          Rat(1, 5),   Rat(3, 10),  Rat(7, 10),  Rat(9, 10), Rat(-4999, 10000)};
}

ProbeReport cocycle_probe(std::optional<long> p, const ProbeConfig& config) {
  if (config.m_min < 1 || config.m_max <= config.m_min) throw std::invalid_argument("probe needs 1 <= m_min < m_max");
  ProbeReport report;
  report.p = p;
  const auto bases = config.bases.empty() ? default_probe_bases() : config.bases;
  for (const auto& x0 : bases) {
    ProbeChain chain;
    chain.base = x0;
    if (abs(x0 + Rat(1, 2)) < Rat(1, 100)) {
      chain.near_singular = true;
      chain.note = "near-singular: within 1/100 of -1/2, skipped";
      report.chains.push_back(std::move(chain));
      continue;
    }
    for (int m = config.m_min; m <= config.m_max; ++m) {
      const Rat x = x0 + Rat(1, ipow(Int(10), static_cast<unsigned long>(m)));
      chain.xs.push_back(x);
      chain.values.push_back(cocycle_value(p, x, config.sigma));
      if (chain.values.size() > 1)
        chain.diffs.push_back(std::abs(chain.values.back() - chain.values[chain.values.size() - 2]));
    }
    report.chains.push_back(std::move(chain));
  }
  return report;
}

}  // namespace qmflab
