#include "qmflab/exactnum.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <tuple>

namespace qmflab {

Rat rat_normalize(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

Int parse_int(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9')
      throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(t, text));
  return rat_normalize(parse_int(trim(t.substr(0, slash)), text),
                       parse_int(trim(t.substr(slash + 1)), text));
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat rpow(const Rat& base, unsigned long exp) {
  return Rat(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

Int nearest_quotient(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("nearest_quotient: zero divisor");
  Int n2 = 2 * num + den;
  Int d2 = 2 * den;
  if (d2 < 0) {
    n2 = -n2;
    d2 = -d2;
  }
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Zeta24 Zeta24::from_exponent(const Int& exp) {
  return Zeta24(mod_floor(exp, Int(24)).get_si());
}

Cplx zeta_to_cplx(Zeta24 z) {
  // Exact values at the quarter turns keep 1, i, -1, -i free of rounding noise.
  switch (z.exponent()) {
    case 0: return {1.0, 0.0};
    case 6: return {0.0, 1.0};
    case 12: return {-1.0, 0.0};
    case 18: return {0.0, -1.0};
    default: break;
  }
  const double t = 2.0 * std::numbers::pi * z.exponent() / 24.0;
  return {std::cos(t), std::sin(t)};
}

std::string to_string(Zeta24 z) { return "zeta24^" + std::to_string(z.exponent()); }

Zeta24 parse_zeta24(std::string_view text) {
  constexpr std::string_view prefix = "zeta24^";
  if (text.substr(0, prefix.size()) != prefix)
    throw std::invalid_argument("malformed zeta24 value '" + std::string(text) + "'");
  return Zeta24::from_exponent(parse_int(text.substr(prefix.size()), text));
}

Mat2Z Mat2Z::inverse() const {
  if (det() != 1) throw std::domain_error("inverse requested for matrix of determinant " + det().get_str());
  return adjugate();
}

bool operator<(const Mat2Z& x, const Mat2Z& y) {
  return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
}

Mat2Z mat_mul(const Mat2Z& m1, const Mat2Z& m2) {
  return {Int(m1.a * m2.a + m1.b * m2.c), Int(m1.a * m2.b + m1.b * m2.d),
          Int(m1.c * m2.a + m1.d * m2.c), Int(m1.c * m2.b + m1.d * m2.d)};
}

Mat2Z mat_pow(const Mat2Z& m, long e) {
  Mat2Z base = e < 0 ? m.inverse() : m;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Mat2Z acc = mats::identity();
  while (n) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::string to_string(const Mat2Z& m) {
  return "(" + m.a.get_str() + "," + m.b.get_str() + ";" + m.c.get_str() + "," + m.d.get_str() + ")";
}

Mat2Z parse_mat(std::string_view text) {
  Int v[4];
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    auto comma = text.find(',', start);
    if ((i < 3) == (comma == std::string_view::npos))
      throw std::invalid_argument("matrix must be given as a,b,c,d");
    auto piece = trim(text.substr(start, i < 3 ? comma - start : std::string_view::npos));
    v[i] = parse_int(piece, text);
    start = comma + 1;
  }
  return {v[0], v[1], v[2], v[3]};
}

std::ostream& operator<<(std::ostream& os, const Mat2Z& m) { return os << to_string(m); }

}  // namespace qmflab
