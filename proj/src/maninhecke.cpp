#include "qmflab/maninhecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmflab {

bool in_manin_set(const Mat2Z& m, long n) {
  if (m.det() != n) return false;
  if (!(m.a > abs(m.c)) || !(m.d > abs(m.b))) return false;
  if (m.b * m.c > 0) return false;
  // -x/2 < y <= x/2  <=>  -x < 2y <= x
  if (m.b == 0 && !(-m.a < 2 * m.c && 2 * m.c <= m.a)) return false;
  if (m.c == 0 && !(-m.d < 2 * m.b && 2 * m.b <= m.d)) return false;
  return true;
}

ManinSet manin_set(long n) {
  if (n < 1) throw std::invalid_argument("Man_n needs n >= 1");
  ManinSet out{n, {}};
  // bc <= 0 forces ad = n + bc <= n, so 1 <= a, d <= n.
  for (long a = 1; a <= n; ++a) {
    for (long d = 1; a * d <= n; ++d) {
      const long m = n - a * d;  // = -bc >= 0
      if (m == 0) {
        for (long c = -a + 1; c < a; ++c)
          if (Mat2Z cand(a, 0, c, d); in_manin_set(cand, n)) out.mats.push_back(cand);
        for (long b = -d + 1; b < d; ++b)
          if (b != 0)
            if (Mat2Z cand(a, b, 0, d); in_manin_set(cand, n)) out.mats.push_back(cand);
        continue;
      }
      for (long b = -d + 1; b < d; ++b) {
        if (b == 0 || m % b != 0) continue;
        const long c = -m / b;
        if (Mat2Z cand(a, b, c, d); in_manin_set(cand, n)) out.mats.push_back(cand);
      }
    }
  }
  std::sort(out.mats.begin(), out.mats.end());
  return out;
}

HomPoly tilde_T(long n, const HomPoly& p) {
  HomPoly acc(p.weight());
  for (const auto& m : manin_set(n).mats) acc += slash(p, m);
  return acc;
}

RatMatrix tilde_T_matrix(long n, int w) {
  std::vector<std::pair<Mat2Z, Rat>> element;
  for (const auto& m : manin_set(n).mats) element.emplace_back(m, Rat(1));
  return operator_matrix(w, element);
}

Rat eigenvalue_on_line(long n, int w, Parity parity) {
  const auto basis = basis_W(w, parity);
  if (basis.size() != 1)
    throw std::domain_error("W_" + std::to_string(w) + "^" + to_string(parity) + " has dimension " +
                            std::to_string(basis.size()) + ", not 1");
  const auto& v = basis.front();
  const auto img = tilde_T(n, v);
  std::size_t lead = 0;
  while (sgn(v.coeffs()[lead]) == 0) ++lead;
  const Rat lambda = img.coeffs()[lead] / v.coeffs()[lead];
  if (!(img == v * lambda)) throw std::domain_error("tilde_T image is not proportional to the basis vector");
  return lambda;
}

}  // namespace qmflab
