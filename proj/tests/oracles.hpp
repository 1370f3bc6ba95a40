#pragma once

// Reference computations for the tests, written independently of the library
// code paths they check.

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "qmflab/exactnum.hpp"

namespace oracle {

using qmflab::Int;
using qmflab::Mat2Z;
using qmflab::Rat;

inline Int divisor_power_sum(long n, unsigned long k) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += qmflab::ipow(Int(d), k);
  return s;
}

/// tau(1..N) from Delta = (E4^3 - E6^2) / 1728.
inline std::vector<Int> tau_eisenstein(int N) {
  const auto len = static_cast<std::size_t>(N + 1);
  std::vector<Int> e4(len), e6(len);
  e4[0] = 1;
  e6[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    e4[n] = 240 * divisor_power_sum(static_cast<long>(n), 3);
    e6[n] = -504 * divisor_power_sum(static_cast<long>(n), 5);
  }
  auto mul = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
    return out;
  };
  const auto e4c = mul(mul(e4, e4), e4);
  const auto e6s = mul(e6, e6);
  std::vector<Int> tau(len);
  for (std::size_t n = 0; n < len; ++n) tau[n] = (e4c[n] - e6s[n]) / 1728;
  return tau;
}

/// Every integer matrix with entries in [-(n+1), n+1] meeting the Man_n conditions,
/// in lexicographic (a, b, c, d) order.
inline std::vector<Mat2Z> manin_brute(long n) {
  std::vector<Mat2Z> out;
  const long r = n + 1;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c)
        for (long d = -r; d <= r; ++d) {
          if (a * d - b * c != n) continue;
          if (!(a > std::abs(c) && d > std::abs(b))) continue;
          if (b * c > 0) continue;
          if (b == 0 && !(Rat(-a, 2) < c && Rat(c) <= Rat(a, 2))) continue;
          if (c == 0 && !(Rat(-d, 2) < b && Rat(b) <= Rat(d, 2))) continue;
          out.emplace_back(a, b, c, d);
        }
  return out;
}

/// #{(c, d) mod N : gcd(c, d, N) = 1} / phi(N).
inline long gamma0_index_brute(long N) {
  long pairs = 0, phi = 0;
  for (long c = 0; c < N; ++c) {
    if (std::gcd(c, N) == 1) ++phi;
    for (long d = 0; d < N; ++d)
      if (std::gcd(std::gcd(c, d), N) == 1) ++pairs;
  }
  return pairs / phi;
}

/// dim S_k = dim M_k - 1 for k >= 4, with dim M_k = #{(a, b) >= 0 : 4a + 6b = k}.
inline int dim_cusp_brute(int k) {
  if (k < 4) return 0;
  int m = 0;
  for (int a = 0; 4 * a <= k; ++a)
    if ((k - 4 * a) % 6 == 0) ++m;
  return m - 1;
}

/// 1 + sum_{n=0}^{terms-1} (-1)^n q^(n+1) prod_{j<=n} (1 - q^j), q = e^(2 pi i k/h),
/// each power taken from its own angle, in long double.
inline std::complex<long double> andrews_direct(long k, long h, long terms) {
  using C = std::complex<long double>;
  const long double two_pi = 2.0L * std::acos(-1.0L);
  C prod = 1.0L, sum = 0.0L;
  for (long n = 0; n < terms; ++n) {
    const C qn = std::polar(1.0L, two_pi * static_cast<long double>(((n + 1) * k) % h) / h);
    sum += (n % 2 == 0 ? 1.0L : -1.0L) * qn * prod;
    prod *= 1.0L - qn;
  }
  return 1.0L + sum;
}

/// Both series for sigma evaluated at a real 0 < q < 1 directly.
inline long double sigma_hypergeometric_real(long double q, int terms) {
  long double sum = 0.0L, denom = 1.0L;
  for (int n = 0; n < terms; ++n) {
    if (n > 0) denom *= 1.0L + std::pow(q, n);
    sum += std::pow(q, n * (n + 1) / 2.0L) / denom;
  }
  return sum;
}

}  // namespace oracle
