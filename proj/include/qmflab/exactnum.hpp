#pragma once

// Exact scalars and small group-theoretic values shared by every module:
// big rationals, powers of the 24th root of unity, 2x2 integer matrices.

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmflab {

using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::invalid_argument when den == 0.
Rat rat_normalize(const Int& num, const Int& den);

/// "num/den" with den > 0, always including the denominator.
std::string to_string(const Rat& r);
std::string to_string(const Int& n);

/// Accepts "a", "a/b" (b != 0) with optional sign; result is canonical.
Rat parse_rat(std::string_view text);

Int gcd(const Int& a, const Int& b);
Int ipow(const Int& base, unsigned long exp);
Rat rpow(const Rat& base, unsigned long exp);

/// floor(num/den + 1/2); den != 0.
Int nearest_quotient(const Int& num, const Int& den);

/// Non-negative remainder in [0, |m|).
Int mod_floor(const Int& a, const Int& m);

bool is_prime(long n);

/// zeta24^exp with zeta24 = exp(2 pi i / 24). Stored as an exponent so that
/// equality is an integer comparison.
class Zeta24 {
 public:
  constexpr Zeta24() = default;
  constexpr explicit Zeta24(long exp) : exp_(static_cast<int>(((exp % 24) + 24) % 24)) {}
  static Zeta24 from_exponent(const Int& exp);

  constexpr int exponent() const { return exp_; }
  constexpr Zeta24 inverse() const { return Zeta24(24 - exp_); }
  constexpr Zeta24 pow(long e) const { return Zeta24((static_cast<long>(exp_) * (e % 24)) % 24); }

  friend constexpr Zeta24 operator*(Zeta24 a, Zeta24 b) { return Zeta24(a.exp_ + b.exp_); }
  friend constexpr bool operator==(Zeta24 a, Zeta24 b) { return a.exp_ == b.exp_; }

 private:
  int exp_ = 0;
};

Cplx zeta_to_cplx(Zeta24 z);
/// "zeta24^e"
std::string to_string(Zeta24 z);
Zeta24 parse_zeta24(std::string_view text);

/// 2x2 integer matrix (a b; c d).
struct Mat2Z {
  Int a{1}, b{0}, c{0}, d{1};

  Mat2Z() = default;
  Mat2Z(Int a_, Int b_, Int c_, Int d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  Mat2Z(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {}

  Int det() const { return Int(a * d - b * c); }
  /// Adjugate; equals the inverse when det() == 1.
  Mat2Z adjugate() const { return {d, Int(-b), Int(-c), a}; }
  /// Inverse of a determinant-one matrix. Throws otherwise.
  Mat2Z inverse() const;
  Mat2Z operator-() const { return {Int(-a), Int(-b), Int(-c), Int(-d)}; }

  friend bool operator==(const Mat2Z& x, const Mat2Z& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const Mat2Z& x, const Mat2Z& y);
};

Mat2Z mat_mul(const Mat2Z& m1, const Mat2Z& m2);
inline Mat2Z operator*(const Mat2Z& m1, const Mat2Z& m2) { return mat_mul(m1, m2); }
/// Power of a determinant-one matrix; negative exponents use the inverse.
Mat2Z mat_pow(const Mat2Z& m, long e);

std::string to_string(const Mat2Z& m);
/// Parses "a,b,c,d".
Mat2Z parse_mat(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Mat2Z& m);

namespace mats {
inline Mat2Z identity() { return {1, 0, 0, 1}; }
inline Mat2Z S() { return {0, -1, 1, 0}; }
inline Mat2Z T() { return {1, 1, 0, 1}; }
inline Mat2Z U() { return {1, -1, 1, 0}; }
/// Second generator of Gamma0(2).
inline Mat2Z R() { return {1, 0, 2, 1}; }
}  // namespace mats

}  // namespace qmflab
