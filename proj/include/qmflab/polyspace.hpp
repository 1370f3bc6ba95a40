#pragma once

// Homogeneous two-variable polynomials of fixed degree, the right slash action
// of integer matrices on them, and exact bases of the period-polynomial space
// W_w and the reciprocity space U_w.
//
// Coordinates: coefficient i multiplies X^i Y^(w-i). The same vectors are read
// as polynomials g(h, k) under h <-> X, k <-> Y.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmflab/exactnum.hpp"
#include "qmflab/linalg.hpp"

namespace qmflab {

enum class Parity { even, odd, both };

/// "+", "-", "both" (also accepts "even"/"odd").
Parity parse_parity(std::string_view text);
std::string to_string(Parity p);

class HomPoly {
 public:
  explicit HomPoly(int weight = 0);
  HomPoly(int weight, std::vector<Rat> coeffs);

  /// c * X^x_degree * Y^(weight - x_degree)
  static HomPoly monomial(int weight, int x_degree, const Rat& c = Rat(1));
  /// X^w - Y^w
  static HomPoly p0(int weight);

  int weight() const { return weight_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& coeff(int x_degree) const { return coeffs_.at(static_cast<std::size_t>(x_degree)); }
  bool is_zero() const;

  Rat operator()(const Rat& x, const Rat& y) const;
  Rat operator()(const Int& x, const Int& y) const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rat& s);
  friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
  friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
  friend HomPoly operator*(HomPoly a, const Rat& s) { return a *= s; }
  friend HomPoly operator*(const Rat& s, HomPoly a) { return a *= s; }
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int weight_;
  std::vector<Rat> coeffs_;
};

/// Human-readable form, e.g. "X^2 - 3/2*X*Y".
std::string to_string(const HomPoly& p);
/// Coefficient vector as exact fraction strings, index = X-degree.
std::vector<std::string> coeff_strings(const HomPoly& p);
/// Inverse of coeff_strings; accepts a comma-separated list as well.
HomPoly parse_coeffs(int weight, std::string_view comma_list);

/// P(aX + bY, cX + dY). A right action for determinant-one matrices.
HomPoly slash(const HomPoly& p, const Mat2Z& m);

/// 1/2 (P(X, Y) +- P(X, -Y)); `sign` must be even or odd.
HomPoly parity_project(const HomPoly& p, Parity sign);

bool has_parity(const HomPoly& p, Parity sign);

/// P + P|S == 0 and P + P|U + P|U^2 == 0 exactly.
bool satisfies_period_relations(const HomPoly& p);

/// Exact basis of W_w = ker(1+S) n ker(1+U+U^2), optionally restricted to a
/// parity; first nonzero coefficient of each vector is 1.
std::vector<HomPoly> basis_W(int w, Parity parity);

/// Exact basis of U_w = {g : g(h+k,k) + g(h,h+k) = g(h,k), g(1,1) = 0}.
std::vector<HomPoly> basis_U(int w, Parity parity);

/// Dimension of the cusp forms of weight k on SL2(Z). Requires k >= 4 even.
int dim_cuspforms(int k);

/// Matrix of a linear operator on V_w in the monomial basis (column j = image
/// of X^j Y^(w-j)).
RatMatrix operator_matrix(int w, const std::vector<std::pair<Mat2Z, Rat>>& group_ring_element);

/// Homogeneous degree-w polynomial through the given (x, y) nodes. The first
/// nodes must determine it uniquely; every node is enforced exactly. Throws
/// std::domain_error when the values are not those of such a polynomial.
HomPoly interpolate(int w, std::span<const std::pair<Int, Int>> nodes, std::span<const Rat> values);

/// Rank of a family of polynomials of equal weight.
std::size_t poly_rank(std::span<const HomPoly> polys);

}  // namespace qmflab
