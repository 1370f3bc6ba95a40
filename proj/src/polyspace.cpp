#include "qmflab/polyspace.hpp"

#include <sstream>
#include <stdexcept>

namespace qmflab {

Parity parse_parity(std::string_view text) {
  if (text == "+" || text == "even") return Parity::even;
  if (text == "-" || text == "odd") return Parity::odd;
  if (text == "both") return Parity::both;
  throw std::invalid_argument("parity must be +, - or both, got '" + std::string(text) + "'");
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::even: return "+";
    case Parity::odd: return "-";
    case Parity::both: return "both";
  }
  return "?";
}

HomPoly::HomPoly(int weight) : weight_(weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  coeffs_.resize(static_cast<std::size_t>(weight) + 1);
}

HomPoly::HomPoly(int weight, std::vector<Rat> coeffs) : weight_(weight), coeffs_(std::move(coeffs)) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  if (coeffs_.size() != static_cast<std::size_t>(weight) + 1)
    throw std::invalid_argument("weight " + std::to_string(weight) + " needs " + std::to_string(weight + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
}

HomPoly HomPoly::monomial(int weight, int x_degree, const Rat& c) {
  HomPoly p(weight);
  p.coeffs_.at(static_cast<std::size_t>(x_degree)) = c;
  return p;
}

HomPoly HomPoly::p0(int weight) {
  HomPoly p(weight);
  p.coeffs_.back() = 1;
  p.coeffs_.front() -= 1;
  return p;
}

bool HomPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

Rat HomPoly::operator()(const Rat& x, const Rat& y) const {
  // sum c_i x^i y^(w-i), Horner in x/y is avoided so y = 0 needs no special case.
  Rat acc;
  Rat xp(1);
  std::vector<Rat> ypow(coeffs_.size());
  ypow[0] = 1;
  for (std::size_t i = 1; i < ypow.size(); ++i) ypow[i] = ypow[i - 1] * y;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) acc += coeffs_[i] * xp * ypow[coeffs_.size() - 1 - i];
    xp *= x;
  }
  return acc;
}

Rat HomPoly::operator()(const Int& x, const Int& y) const {
  // Integer arguments: accumulate over the common denominator-free powers.
  Rat acc;
  Int xp(1);
  std::vector<Int> ypow(coeffs_.size());
  ypow[0] = 1;
  for (std::size_t i = 1; i < ypow.size(); ++i) ypow[i] = ypow[i - 1] * y;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) acc += coeffs_[i] * Rat(Int(xp * ypow[coeffs_.size() - 1 - i]));
    xp *= x;
  }
  return acc;
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  if (o.weight_ != weight_) throw std::invalid_argument("weight mismatch in polynomial sum");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  if (o.weight_ != weight_) throw std::invalid_argument("weight mismatch in polynomial difference");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

std::string to_string(const HomPoly& p) {
  std::ostringstream os;
  bool first = true;
  const int w = p.weight();
  for (int i = w; i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const bool unit = mag == 1;
    if (!unit || (i == 0 && w - i == 0)) os << mag.get_str();
    bool need_star = !unit;
    auto factor = [&](const char* var, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << var;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    factor("X", i);
    factor("Y", w - i);
  }
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> coeff_strings(const HomPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

HomPoly parse_coeffs(int weight, std::string_view comma_list) {
  std::vector<Rat> cs;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    auto comma = comma_list.find(',', start);
    auto piece = comma_list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    cs.push_back(parse_rat(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return HomPoly(weight, std::move(cs));
}

namespace {

// Coefficient vectors (index = X-degree) of (uX + vY)^e for e = 0..w.
std::vector<std::vector<Int>> linear_form_powers(const Int& u, const Int& v, int w) {
  std::vector<std::vector<Int>> pw(static_cast<std::size_t>(w) + 1);
  pw[0] = {Int(1)};
  for (int e = 1; e <= w; ++e) {
    const auto& prev = pw[static_cast<std::size_t>(e - 1)];
    std::vector<Int> cur(static_cast<std::size_t>(e) + 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      cur[j + 1] += prev[j] * u;
      cur[j] += prev[j] * v;
    }
    pw[static_cast<std::size_t>(e)] = std::move(cur);
  }
  return pw;
}

}  // namespace

HomPoly slash(const HomPoly& p, const Mat2Z& m) {
  const int w = p.weight();
  const auto first = linear_form_powers(m.a, m.b, w);
  const auto second = linear_form_powers(m.c, m.d, w);
  std::vector<Rat> out(static_cast<std::size_t>(w) + 1);
  for (int i = 0; i <= w; ++i) {
    const Rat& ci = p.coeff(i);
    if (sgn(ci) == 0) continue;
    const auto& A = first[static_cast<std::size_t>(i)];
    const auto& B = second[static_cast<std::size_t>(w - i)];
    for (std::size_t s = 0; s < A.size(); ++s) {
      if (A[s] == 0) continue;
      for (std::size_t t = 0; t < B.size(); ++t) {
        if (B[t] == 0) continue;
        out[s + t] += ci * Rat(Int(A[s] * B[t]));
      }
    }
  }
  return HomPoly(w, std::move(out));
}

HomPoly parity_project(const HomPoly& p, Parity sign) {
  if (sign == Parity::both) throw std::invalid_argument("parity_project needs + or -");
  // Y -> -Y flips the sign of terms with odd Y-degree.
  std::vector<Rat> out(p.coeffs().size());
  const int w = p.weight();
  for (int i = 0; i <= w; ++i) {
    const bool odd_in_y = ((w - i) % 2) != 0;
    if (odd_in_y == (sign == Parity::odd)) out[static_cast<std::size_t>(i)] = p.coeff(i);
  }
  return HomPoly(w, std::move(out));
}

bool has_parity(const HomPoly& p, Parity sign) {
  if (sign == Parity::both) return true;
  return parity_project(p, sign) == p;
}

bool satisfies_period_relations(const HomPoly& p) {
  const auto U = mats::U();
  const auto U2 = U * U;
  return (p + slash(p, mats::S())).is_zero() && (p + slash(p, U) + slash(p, U2)).is_zero();
}

RatMatrix operator_matrix(int w, const std::vector<std::pair<Mat2Z, Rat>>& element) {
  const auto n = static_cast<std::size_t>(w) + 1;
  RatMatrix m(n, n);
  for (int j = 0; j <= w; ++j) {
    HomPoly img(w);
    const auto mono = HomPoly::monomial(w, j);
    for (const auto& [g, coef] : element) img += slash(mono, g) * coef;
    for (std::size_t r = 0; r < n; ++r) m(r, static_cast<std::size_t>(j)) = img.coeffs()[r];
  }
  return m;
}

namespace {

void add_rows(RatMatrix& system, const RatMatrix& block) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    std::vector<Rat> row(block.cols());
    for (std::size_t c = 0; c < block.cols(); ++c) row[c] = block(r, c);
    system.append_row(row);
  }
}

void add_parity_rows(RatMatrix& system, int w, Parity parity) {
  if (parity == Parity::both) return;
  for (int i = 0; i <= w; ++i) {
    const bool odd_in_y = ((w - i) % 2) != 0;
    if (odd_in_y == (parity == Parity::odd)) continue;
    std::vector<Rat> row(static_cast<std::size_t>(w) + 1);
    row[static_cast<std::size_t>(i)] = 1;
    system.append_row(row);
  }
}

void require_even_weight(int w) {
  if (w < 2 || w % 2 != 0) throw std::invalid_argument("weight must be even and >= 2, got " + std::to_string(w));
}

std::vector<HomPoly> to_polys(int w, std::vector<std::vector<Rat>> vs) {
  std::vector<HomPoly> out;
  out.reserve(vs.size());
  for (auto& v : vs) out.emplace_back(w, std::move(v));
  return out;
}

}  // namespace

std::vector<HomPoly> basis_W(int w, Parity parity) {
  require_even_weight(w);
  const auto U = mats::U();
  RatMatrix system;
  add_rows(system, operator_matrix(w, {{mats::identity(), Rat(1)}, {mats::S(), Rat(1)}}));
  add_rows(system, operator_matrix(w, {{mats::identity(), Rat(1)}, {U, Rat(1)}, {U * U, Rat(1)}}));
  add_parity_rows(system, w, parity);
  return to_polys(w, nullspace(system));
}

std::vector<HomPoly> basis_U(int w, Parity parity) {
  require_even_weight(w);
  RatMatrix system;
  // g|T + g|T' - g with T = (1 1; 0 1), T' = (1 0; 1 1).
  add_rows(system, operator_matrix(w, {{mats::T(), Rat(1)}, {Mat2Z(1, 0, 1, 1), Rat(1)},
                                       {mats::identity(), Rat(-1)}}));
  system.append_row(std::vector<Rat>(static_cast<std::size_t>(w) + 1, Rat(1)));  // g(1,1)
  add_parity_rows(system, w, parity);
  return to_polys(w, nullspace(system));
}

int dim_cuspforms(int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("dim_cuspforms needs even k >= 4");
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

HomPoly interpolate(int w, std::span<const std::pair<Int, Int>> nodes, std::span<const Rat> values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: node/value count mismatch");
  const auto n = static_cast<std::size_t>(w) + 1;
  RatMatrix m(nodes.size(), n);
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const auto& [x, y] = nodes[r];
    for (std::size_t i = 0; i < n; ++i)
      m(r, i) = Rat(Int(ipow(x, static_cast<unsigned long>(i)) * ipow(y, static_cast<unsigned long>(w) - i)));
  }
  try {
    return HomPoly(w, solve_unique(m, std::vector<Rat>(values.begin(), values.end())));
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("values are not those of a homogeneous polynomial of degree ") +
                            std::to_string(w) + " (" + e.what() + ")");
  }
}

std::size_t poly_rank(std::span<const HomPoly> polys) {
  if (polys.empty()) return 0;
  RatMatrix m;
  for (const auto& p : polys) m.append_row(p.coeffs());
  return rank(m);
}

}  // namespace qmflab
