#pragma once

// Hecke operators on period polynomials through the Manin matrix set
//   Man_n = { (a b; c d) : ad - bc = n, a > |c|, d > |b|, bc <= 0,
//             b = 0 => -a/2 < c <= a/2,  c = 0 => -d/2 < b <= d/2 }.

#include <vector>

#include "qmflab/exactnum.hpp"
#include "qmflab/linalg.hpp"
#include "qmflab/polyspace.hpp"

namespace qmflab {

struct ManinSet {
  long n = 1;
  std::vector<Mat2Z> mats;  // sorted
};

/// True iff m satisfies every defining condition of Man_n.
bool in_manin_set(const Mat2Z& m, long n);

ManinSet manin_set(long n);

/// sum over Man_n of P(aX + bY, cX + dY).
HomPoly tilde_T(long n, const HomPoly& p);

/// Matrix of tilde_T(n, .) on V_w in the monomial basis.
RatMatrix tilde_T_matrix(long n, int w);

/// The scalar lambda with tilde_T(n, v) = lambda v on the one-dimensional
/// W_w^parity. Throws std::domain_error if the space is not a line or the
/// image is not proportional.
Rat eigenvalue_on_line(long n, int w, Parity parity);

}  // namespace qmflab
