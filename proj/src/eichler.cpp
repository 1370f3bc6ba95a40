#include "qmflab/eichler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmflab/maninhecke.hpp"

namespace qmflab {

namespace {

constexpr int kWeight = 10;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Gamma(s, x) / x^s for integer s >= 1: (s-1)! e^-x sum_{j<s} x^(j-s) / j!
double upper_gamma_scaled(int s, double x) {
  double sum = 0.0, term = std::pow(x, -s);
  for (int j = 0; j < s; ++j) {
    sum += term;
    term *= x / (j + 1);
  }
  return factorial(s - 1) * std::exp(-x) * sum;
}

const CuspFormQexp& cached_delta(int N) {
  static const CuspFormQexp big = delta_coeffs(1000);
  if (N > 1000) throw std::invalid_argument("at most 1000 terms of Delta are supported here");
  return big;
}

std::vector<Cplx> poly_mul(const std::vector<Cplx>& x, const std::vector<Cplx>& y) {
  std::vector<Cplx> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

double max_norm(const CplxPoly& p) {
  double m = 0.0;
  for (const auto& c : p) m = std::max(m, std::abs(c));
  return m;
}

double l2_norm(const CplxPoly& p) {
  double s = 0.0;
  for (const auto& c : p) s += std::norm(c);
  return std::sqrt(s);
}

// e^(2 pi i n x) from the exact fractional part of n x.
Cplx unit(const Rat& x, long n) {
  const Rat nx = x * n;
  const Int& den = nx.get_den();
  const Rat frac(mod_floor(nx.get_num(), den), den);
  return std::polar(1.0, kTwoPi * frac.get_d());
}

}  // namespace

CuspFormQexp delta_coeffs(int N) {
  if (N < 1) throw std::invalid_argument("delta_coeffs needs N >= 1");
  const auto len = static_cast<std::size_t>(N);
  // prod_{n < N} (1 - q^n)^24 through q^(N-1)
  std::vector<Int> prod(len, Int(0));
  prod[0] = 1;
  for (std::size_t n = 1; n < len; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (std::size_t i = len - 1; i >= n; --i) prod[i] -= prod[i - n];
  CuspFormQexp out;
  out.a.assign(len + 1, Int(0));
  for (std::size_t m = 1; m <= len; ++m) out.a[m] = prod[m - 1];
  return out;
}

double completed_L(int s, int terms) {
  if (s < 1 || s > 11) throw std::invalid_argument("completed_L needs 1 <= s <= 11");
  if (terms < 1) throw std::invalid_argument("completed_L needs terms >= 1");
  const auto& tau = cached_delta(terms);
  double acc = 0.0;
  for (int m = terms; m >= 1; --m) {
    const double x = kTwoPi * m;
    acc += tau[static_cast<std::size_t>(m)].get_d() * (upper_gamma_scaled(s, x) + upper_gamma_scaled(12 - s, x));
  }
  return acc;
}

double L_delta(int s, int terms) { return std::pow(kTwoPi, s) / factorial(s - 1) * completed_L(s, terms); }

CplxPoly period_poly_delta(int terms) {
  // int_0^{i inf} Delta(z) z^n dz = i^(n+1) Lambda(n+1)
  static const Cplx ipow4[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CplxPoly r(kWeight + 1);
  double binom = 1.0;
  for (int n = 0; n <= kWeight; ++n) {
    const double sign = (kWeight - n) % 2 == 0 ? 1.0 : -1.0;
    r[static_cast<std::size_t>(n)] = binom * sign * ipow4[(n + 1) % 4] * completed_L(n + 1, terms);
    binom = binom * (kWeight - n) / (n + 1);
  }
  return r;
}

Cplx eval(const CplxPoly& p, Cplx X, Cplx Y) {
  const int w = static_cast<int>(p.size()) - 1;
  Cplx acc;
  for (int i = 0; i <= w; ++i) acc += p[static_cast<std::size_t>(i)] * std::pow(X, i) * std::pow(Y, w - i);
  return acc;
}

CplxPoly slash(const CplxPoly& p, const Mat2Z& m) {
  const std::size_t w = p.size() - 1;
  // index = X-degree
  const std::vector<Cplx> first{Cplx(m.b.get_d()), Cplx(m.a.get_d())};
  const std::vector<Cplx> second{Cplx(m.d.get_d()), Cplx(m.c.get_d())};
  CplxPoly out(w + 1);
  for (std::size_t i = 0; i <= w; ++i) {
    std::vector<Cplx> term{p[i]};
    for (std::size_t j = 0; j < i; ++j) term = poly_mul(term, first);
    for (std::size_t j = i; j < w; ++j) term = poly_mul(term, second);
    for (std::size_t j = 0; j <= w; ++j) out[j] += term[j];
  }
  return out;
}

CplxPoly parity_project(const CplxPoly& p, Parity sign) {
  const std::size_t w = p.size() - 1;
  CplxPoly out(p.size());
  for (std::size_t i = 0; i <= w; ++i) {
    const bool even_y = (w - i) % 2 == 0;
    if (sign == Parity::both || (sign == Parity::even) == even_y) out[i] = p[i];
  }
  return out;
}

double period_relation_residual(const CplxPoly& r) {
  const double scale = max_norm(r);
  if (scale == 0.0) return 0.0;
  CplxPoly s_rel = slash(r, mats::S());
  CplxPoly u_rel = slash(r, mats::U());
  const CplxPoly u2 = slash(r, mats::U() * mats::U());
  for (std::size_t i = 0; i < r.size(); ++i) {
    s_rel[i] += r[i];
    u_rel[i] += r[i] + u2[i];
  }
  return std::max(max_norm(s_rel), max_norm(u_rel)) / scale;
}

Projection project_onto_W(const CplxPoly& p, Parity parity) {
  const int w = static_cast<int>(p.size()) - 1;
  const CplxPoly v = parity_project(p, parity);
  const auto basis = basis_W(w, parity);
  const std::size_t k = basis.size();
  std::vector<std::vector<double>> b(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& c : basis[i].coeffs()) b[i].push_back(c.get_d());

  // Normal equations G c = B^T v.
  std::vector<std::vector<Cplx>> aug(k, std::vector<Cplx>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t t = 0; t <= static_cast<std::size_t>(w); ++t) aug[i][j] += b[i][t] * b[j][t];
    for (std::size_t t = 0; t <= static_cast<std::size_t>(w); ++t) aug[i][k] += b[i][t] * v[t];
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
    std::swap(aug[col], aug[piv]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const Cplx f = aug[r][col] / aug[col][col];
      for (std::size_t c = col; c <= k; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Projection out{parity, {}, 0.0};
  CplxPoly resid = v;
  for (std::size_t i = 0; i < k; ++i) {
    const Cplx ci = aug[i][k] / aug[i][i];
    out.coords.push_back(ci);
    for (std::size_t t = 0; t <= static_cast<std::size_t>(w); ++t) resid[t] -= ci * b[i][t];
  }
  const double norm = l2_norm(v);
  out.residual = norm == 0.0 ? 0.0 : l2_norm(resid) / norm;
  return out;
}

Cplx eichler_integral(const Rat& x, int terms) {
  if (terms < 1) throw std::invalid_argument("eichler_integral needs terms >= 1");
  const auto& tau = cached_delta(terms);
  // 10!/(-2 pi i)^11 = -i 10!/(2 pi)^11
  const Cplx pre(0.0, -factorial(kWeight) / std::pow(kTwoPi, kWeight + 1));
  Cplx acc;
  for (int n = terms; n >= 1; --n)
    acc += tau[static_cast<std::size_t>(n)].get_d() / std::pow(static_cast<double>(n), kWeight + 1) * unit(x, n);
  return pre * acc;
}

Cplx eichler_period(const Rat& x, int terms) {
  if (sgn(x) == 0) throw std::domain_error("eichler_period needs x != 0");
  return eichler_integral(x, terms) - std::pow(x.get_d(), kWeight) * eichler_integral(Rat(-1) / x, terms);
}

Cplx one_variable(const CplxPoly& r, const Rat& x) { return eval(r, Cplx(1.0), Cplx(x.get_d())); }

HeckePeriodCheck hecke_period_crosscheck(long n, int terms, double tol) {
  if (n < 1) throw std::invalid_argument("hecke_period_crosscheck needs n >= 1");
  const CplxPoly v = parity_project(period_poly_delta(terms), Parity::odd);
  const RatMatrix t = tilde_T_matrix(n, kWeight);
  CplxPoly tv(v.size());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) tv[i] += t(i, j).get_d() * v[j];

  HeckePeriodCheck out;
  out.n = n;
  out.tau = delta_coeffs(static_cast<int>(n))[static_cast<std::size_t>(n)];
  Cplx num, den;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += tv[i] * std::conj(v[i]);
    den += v[i] * std::conj(v[i]);
  }
  out.lambda = (num / den).real();
  CplxPoly diff(v.size());
  const double tau = out.tau.get_d();
  for (std::size_t i = 0; i < v.size(); ++i) diff[i] = tv[i] - tau * v[i];
  out.residual = l2_norm(diff) / (std::abs(tau) * l2_norm(v));
  out.pass = out.residual < tol;
  return out;
}

}  // namespace qmflab
