#pragma once

// Delta = q prod (1 - q^n)^24, its period polynomial
//   r(X, Y) = int_0^{i inf} Delta(z) (X z - Y)^10 dz
// from critical L-values, and the Eichler integral
//   Q(x) = 10!/(-2 pi i)^11 sum_n tau(n) n^-11 e^(2 pi i n x).

#include <vector>

#include "qmflab/exactnum.hpp"
#include "qmflab/polyspace.hpp"

namespace qmflab {

struct CuspFormQexp {
  int weight = 12;
  std::vector<Int> a;  // a[n], n = 0..N, a[0] = 0
  const Int& operator[](std::size_t n) const { return a[n]; }
  std::size_t order() const { return a.empty() ? 0 : a.size() - 1; }
};

/// tau(1..N).
CuspFormQexp delta_coeffs(int N);

/// Lambda(s) = (2 pi)^-s Gamma(s) L(Delta, s) for integer 1 <= s <= 11, via
///   Lambda(s) = sum_m tau(m) [Gamma(s, 2 pi m)/(2 pi m)^s + Gamma(12-s, 2 pi m)/(2 pi m)^(12-s)].
double completed_L(int s, int terms = 200);
double L_delta(int s, int terms = 200);

/// Coefficient n is the coefficient of X^n Y^(10-n) in r.
using CplxPoly = std::vector<Cplx>;

CplxPoly period_poly_delta(int terms = 200);

Cplx eval(const CplxPoly& p, Cplx X, Cplx Y);
CplxPoly slash(const CplxPoly& p, const Mat2Z& m);
CplxPoly parity_project(const CplxPoly& p, Parity sign);

/// max(|r + r|S|, |r + r|U + r|U^2|) / |r| in the max norm.
double period_relation_residual(const CplxPoly& r);

struct Projection {
  Parity parity;
  std::vector<Cplx> coords;  // along basis_W(w, parity)
  double residual = 0.0;  // |v - proj v| / |v|, Euclidean
};

/// Least-squares projection of the parity part of p onto the span of the exact
/// basis_W(w, parity).
Projection project_onto_W(const CplxPoly& p, Parity parity);

/// Truncated series Q(x) with `terms` terms.
Cplx eichler_integral(const Rat& x, int terms = 200);

/// Q(x) - x^10 Q(-1/x), x != 0.
Cplx eichler_period(const Rat& x, int terms = 200);

/// r(1, x).
Cplx one_variable(const CplxPoly& r, const Rat& x);

struct HeckePeriodCheck {
  long n = 0;
  Int tau;
  double lambda = 0.0;  // <T v, v> / <v, v>
  double residual = 0.0;  // |T v - tau v| / |tau v|
  bool pass = false;
};

/// tilde_T(n) on the odd part of r compared with tau(n) times the odd part.
HeckePeriodCheck hecke_period_crosscheck(long n, int terms = 200, double tol = 1e-5);

}  // namespace qmflab
