#pragma once

// Gamma0(2) words in T = (1 1; 0 1) and R = (1 0; 2 1), the multiplier system
// chi with chi(T) = chi(R) = zeta24, coset tables for Gamma0(M), Schreier
// generators, and the compatibility of chi with chi^p at alpha = (1 0; 0 p).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qmflab/exactnum.hpp"

namespace qmflab {

enum class Gen { T, R };

struct Word {
  int sign = 1;
  std::vector<std::pair<Gen, Int>> factors;
};

Mat2Z reassemble(const Word& w);
std::string to_string(const Word& w);

bool in_gamma0(const Mat2Z& m, long level);

/// Writes a determinant-one matrix with even lower-left entry as a signed word
/// in T and R. Throws std::invalid_argument when the matrix is not in Gamma0(2).
Word decompose_gamma02(const Mat2Z& gamma);

/// Same group element, different word: a random prefix P is split off and
/// P^-1 gamma is decomposed.
Word decompose_gamma02_perturbed(const Mat2Z& gamma, std::mt19937_64& rng);

/// Character on Gamma0(2) given by its values on T and R. Requires the value on
/// -I = (R T^-1)^2 to be trivial.
class MultSys {
 public:
  MultSys(Zeta24 on_T, Zeta24 on_R);
  static MultSys trivial() { return {Zeta24(0), Zeta24(0)}; }
  /// chi(T) = chi(R) = zeta24
  static MultSys chi() { return {Zeta24(1), Zeta24(1)}; }

  Zeta24 on_T() const { return t_; }
  Zeta24 on_R() const { return r_; }
  MultSys pow(long p) const { return {t_.pow(p), r_.pow(p)}; }

 private:
  Zeta24 t_, r_;
};

Zeta24 chi_eval(const Word& w, const MultSys& ms);
Zeta24 chi_eval(const Mat2Z& gamma, const MultSys& ms = MultSys::chi());

/// [SL2(Z) : Gamma0(M)] = M prod_{q | M} (1 + 1/q)
long gamma0_index(long level);

/// Right cosets Gamma0(M) \ SL2(Z), indexed by points (u : v) of P^1(Z/M).
class CosetTable {
 public:
  explicit CosetTable(long level);

  long level() const { return level_; }
  std::size_t size() const { return points_.size(); }
  /// Canonical representative pair of point i.
  std::pair<long, long> point(std::size_t i) const { return points_[i]; }
  /// Index of the point (u : v); gcd(u, v, M) must be 1.
  std::size_t index_of(long u, long v) const;
  /// Coset containing the matrix (point of its bottom row).
  std::size_t index_of(const Mat2Z& m) const;
  const Mat2Z& rep(std::size_t i) const { return reps_[i]; }
  std::size_t act_S(std::size_t i) const { return act_S_[i]; }
  std::size_t act_T(std::size_t i) const { return act_T_[i]; }

 private:
  long level_;
  std::vector<std::int32_t> canon_;  // (u, v) -> point index, -1 if not a point
  std::vector<std::pair<long, long>> points_;
  std::vector<Mat2Z> reps_;
  std::vector<std::size_t> act_S_, act_T_;
};

/// Non-trivial Schreier generators rep_i g rep_{i.g}^-1, g in {S, T}, without
/// duplicates. They generate Gamma0(M).
std::vector<Mat2Z> schreier_generators(long level);
std::vector<Mat2Z> schreier_generators(const CosetTable& table);

struct GeneratorCheck {
  Mat2Z gamma;
  Zeta24 lhs;  // chi(gamma)
  Zeta24 rhs;  // chi((a, p b; c/p, d))^p
  bool ok() const { return lhs == rhs; }
};

struct CompatReport {
  long p = 0;
  std::size_t cosets = 0;
  std::vector<GeneratorCheck> generators;
  std::size_t spot_checks = 0;
  std::size_t spot_failures = 0;
  bool pass() const;
};

/// One side pair of the compatibility criterion at alpha = (1 0; 0 p).
GeneratorCheck compat_pair(const Mat2Z& gamma, long p);

/// Checks chi(gamma) = chi(alpha^-1 gamma alpha)^p on Schreier generators of
/// Gamma0(2p), plus `spot_checks` random products of them.
CompatReport compat_check(long p, std::size_t spot_checks = 50, std::uint64_t seed = 0);

/// The five generators of Gamma0(10) quoted for p = 5 and their chi values.
std::vector<std::pair<Mat2Z, Zeta24>> reference_gamma0_10_generators();

/// beta_0 = (1 0; 0 p), beta_j = (1 j; 0 p), ..., beta_inf = (p 0; 0 1).
std::vector<Mat2Z> coset_reps(long p);

struct CosetRepValue {
  Mat2Z beta;
  Zeta24 c;
};

/// c(beta_inf) = (-1)^((p^2-1)/24), c(beta_j) = zeta24^(p j), same order as
/// coset_reps.
std::vector<CosetRepValue> c_values(long p);

/// c values from the factorizations beta_j = alpha T^j and
/// beta_inf = -T^((p+1)/2) R^-1 alpha T^((p+1)/2) R^-1 via chi_eval with the
/// given pair of multiplier systems. Verifies each factorization.
std::vector<CosetRepValue> c_values_from_factorizations(long p, const MultSys& ms, const MultSys& ms_prime);

using RatFunction = std::function<Cplx(const Rat&)>;

/// (f|beta)(x) = |cx + d|^-weight f((ax + b)/(cx + d)); throws
/// std::domain_error at a pole.
Cplx slash_value(const RatFunction& f, const Mat2Z& beta, int weight, const Rat& x);

/// sum_j c(beta_j)^-1 (f|beta_j), with the c values taken from
/// c_values_from_factorizations.
RatFunction apply_general_hecke(RatFunction f, long p, const MultSys& ms, const MultSys& ms_prime, int weight = 1);

}  // namespace qmflab
