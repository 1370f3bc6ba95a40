#include "qmflab/modgroup.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmflab {

namespace {

Mat2Z gen_power(Gen g, const Int& e) {
  return g == Gen::T ? Mat2Z(Int(1), e, Int(0), Int(1)) : Mat2Z(Int(1), Int(0), Int(2 * e), Int(1));
}

void push_factor(Word& w, Gen g, const Int& e) {
  if (e == 0) return;
  if (!w.factors.empty() && w.factors.back().first == g) {
    w.factors.back().second += e;
    if (w.factors.back().second == 0) w.factors.pop_back();
    return;
  }
  w.factors.emplace_back(g, e);
}

}  // namespace

Mat2Z reassemble(const Word& w) {
  Mat2Z m = mats::identity();
  for (const auto& [g, e] : w.factors) m = m * gen_power(g, e);
  return w.sign < 0 ? -m : m;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  os << (w.sign < 0 ? "-" : "+");
  if (w.factors.empty()) os << "I";
  for (const auto& [g, e] : w.factors) os << (g == Gen::T ? "T" : "R") << "^" << e.get_str();
  return os.str();
}

bool in_gamma0(const Mat2Z& m, long level) {
  return m.det() == 1 && mod_floor(m.c, Int(level)) == 0;
}

Word decompose_gamma02(const Mat2Z& gamma) {
  if (!in_gamma0(gamma, 2)) throw std::invalid_argument("matrix " + to_string(gamma) + " is not in Gamma0(2)");
  Word w;
  Mat2Z g = gamma;
  // a is odd throughout. After a T-step |a| <= |c|/2, after an R-step |c| < |a|,
  // so |a| at least halves per round.
  while (g.c != 0) {
    const Int q = nearest_quotient(Int(-g.a), g.c);
    if (q != 0) {
      g = gen_power(Gen::T, q) * g;
      push_factor(w, Gen::T, Int(-q));
    }
    const Int m = nearest_quotient(Int(-g.c), Int(2 * g.a));
    if (m != 0) {
      g = gen_power(Gen::R, m) * g;
      push_factor(w, Gen::R, Int(-m));
    }
  }
  // g = (1 b; 0 1) = T^b or (-1 b; 0 -1) = -T^-b
  if (g.a == 1) {
    push_factor(w, Gen::T, g.b);
  } else {
    w.sign = -1;
    push_factor(w, Gen::T, Int(-g.b));
  }
  return w;
}

Word decompose_gamma02_perturbed(const Mat2Z& gamma, std::mt19937_64& rng) {
  if (!in_gamma0(gamma, 2)) throw std::invalid_argument("matrix " + to_string(gamma) + " is not in Gamma0(2)");
  std::uniform_int_distribution<int> len(1, 3), which(0, 1), ex(1, 3), sgn_pick(0, 1);
  Word prefix;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    const long e = ex(rng) * (sgn_pick(rng) ? 1 : -1);
    push_factor(prefix, which(rng) ? Gen::T : Gen::R, Int(e));
  }
  const Word rest = decompose_gamma02(reassemble(prefix).inverse() * gamma);
  Word out = prefix;
  out.sign = rest.sign;
  for (const auto& [g, e] : rest.factors) push_factor(out, g, e);
  return out;
}

MultSys::MultSys(Zeta24 on_T, Zeta24 on_R) : t_(on_T), r_(on_R) {
  // chi(-I) = chi((R T^-1)^2) = (r / t)^2 must be 1.
  if ((r_ * t_.inverse()).pow(2) != Zeta24(0))
    throw std::invalid_argument("multiplier system must be trivial on -I");
}

Zeta24 chi_eval(const Word& w, const MultSys& ms) {
  Int acc;
  for (const auto& [g, e] : w.factors) acc += e * (g == Gen::T ? ms.on_T().exponent() : ms.on_R().exponent());
  return Zeta24::from_exponent(acc);
}

Zeta24 chi_eval(const Mat2Z& gamma, const MultSys& ms) { return chi_eval(decompose_gamma02(gamma), ms); }

long gamma0_index(long level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  long idx = level;
  long m = level;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    idx = idx / q * (q + 1);
  }
  if (m > 1) idx = idx / m * (m + 1);
  return idx;
}

CosetTable::CosetTable(long level) : level_(level) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  const long M = level;
  std::vector<long> units;
  for (long l = 1; l <= M; ++l)
    if (std::gcd(l, M) == 1) units.push_back(l % M);

  canon_.assign(static_cast<std::size_t>(M * M), -1);
  for (long u = 0; u < M; ++u) {
    for (long v = 0; v < M; ++v) {
      if (std::gcd(std::gcd(u, v), M) != 1 || canon_[static_cast<std::size_t>(u * M + v)] >= 0) continue;
      const auto idx = static_cast<std::int32_t>(points_.size());
      points_.emplace_back(u, v);
      for (long l : units) canon_[static_cast<std::size_t>((l * u % M) * M + l * v % M)] = idx;
    }
  }

  const std::size_t n = points_.size();
  act_S_.resize(n);
  act_T_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, v] = points_[i];
    act_S_[i] = index_of(v, -u);  // (u, v) S = (v, -u)
    act_T_[i] = index_of(u, u + v);
  }

  // Breadth-first transversal from the identity coset over S, T, T^-1.
  reps_.assign(n, Mat2Z());
  std::vector<bool> seen(n, false);
  const std::size_t start = index_of(0, 1);
  seen[start] = true;
  std::deque<std::size_t> queue{start};
  const Mat2Z moves[] = {mats::S(), mats::T(), mat_pow(mats::T(), -1)};
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (const auto& g : moves) {
      Mat2Z next = reps_[i] * g;
      const auto j = index_of(next);
      if (seen[j]) continue;
      seen[j] = true;
      reps_[j] = std::move(next);
      queue.push_back(j);
    }
  }
  for (bool s : seen)
    if (!s) throw std::logic_error("coset transversal did not reach every point");
}

std::size_t CosetTable::index_of(long u, long v) const {
  const long M = level_;
  u = ((u % M) + M) % M;
  v = ((v % M) + M) % M;
  const auto idx = canon_[static_cast<std::size_t>(u * M + v)];
  if (idx < 0) throw std::invalid_argument("(u : v) is not a point of P^1(Z/M)");
  return static_cast<std::size_t>(idx);
}

std::size_t CosetTable::index_of(const Mat2Z& m) const {
  const Int M(level_);
  return index_of(mod_floor(m.c, M).get_si(), mod_floor(m.d, M).get_si());
}

std::vector<Mat2Z> schreier_generators(const CosetTable& table) {
  std::vector<Mat2Z> out;
  std::set<Mat2Z> seen;
  const Mat2Z id = mats::identity();
  const Mat2Z minus_id = -id;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (int which = 0; which < 2; ++which) {
      const Mat2Z g = which == 0 ? mats::S() : mats::T();
      const std::size_t j = which == 0 ? table.act_S(i) : table.act_T(i);
      Mat2Z s = table.rep(i) * g * table.rep(j).inverse();
      if (s == id || s == minus_id) continue;
      if (!in_gamma0(s, table.level())) throw std::logic_error("Schreier generator outside Gamma0(M)");
      if (seen.insert(s).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Mat2Z> schreier_generators(long level) { return schreier_generators(CosetTable(level)); }

bool CompatReport::pass() const {
  if (spot_failures != 0) return false;
  for (const auto& g : generators)
    if (!g.ok()) return false;
  return true;
}

GeneratorCheck compat_pair(const Mat2Z& gamma, long p) {
  if (mod_floor(gamma.c, Int(p)) != 0)
    throw std::logic_error("lower-left entry of " + to_string(gamma) + " is not divisible by " + std::to_string(p));
  const Mat2Z conj(gamma.a, Int(p * gamma.b), Int(gamma.c / p), gamma.d);
  return {gamma, chi_eval(gamma), chi_eval(conj).pow(p)};
}

CompatReport compat_check(long p, std::size_t spot_checks, std::uint64_t seed) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("compat_check needs a prime p >= 5");
  const CosetTable table(2 * p);
  CompatReport report;
  report.p = p;
  report.cosets = table.size();
  const auto gens = schreier_generators(table);
  report.generators.reserve(gens.size());
  for (const auto& g : gens) report.generators.push_back(compat_pair(g, p));

  // Products of generators exercise the multiplicativity argument directly.
  std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(p));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(2, 5), inv(0, 1);
  for (std::size_t s = 0; s < spot_checks; ++s) {
    Mat2Z prod = mats::identity();
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      const Mat2Z& g = gens[pick(rng)];
      prod = prod * (inv(rng) ? g.inverse() : g);
    }
    ++report.spot_checks;
    if (!compat_pair(prod, p).ok()) ++report.spot_failures;
  }
  return report;
}

std::vector<std::pair<Mat2Z, Zeta24>> reference_gamma0_10_generators() {
  return {{Mat2Z(1, 1, 0, 1), Zeta24(1)},
          {Mat2Z(3, -1, 10, -3), Zeta24(0)},
          {Mat2Z(19, -7, 30, -11), Zeta24(20)},
          {Mat2Z(11, -5, 20, -9), Zeta24(19)},
          {Mat2Z(7, -5, 10, -7), Zeta24(0)}};
}

std::vector<Mat2Z> coset_reps(long p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("coset_reps needs a prime");
  if (p == 2) throw std::invalid_argument("coset_reps needs p not dividing the level 2");
  std::vector<Mat2Z> out;
  for (long j = 0; j < p; ++j) out.emplace_back(1, j, 0, p);
  out.emplace_back(p, 0, 0, 1);
  return out;
}

std::vector<CosetRepValue> c_values(long p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("c_values needs a prime p >= 5");
  const long e = p * p - 1;
  if (e % 24 != 0) throw std::logic_error("24 does not divide p^2 - 1");
  const auto reps = coset_reps(p);
  std::vector<CosetRepValue> out;
  for (long j = 0; j < p; ++j) out.push_back({reps[static_cast<std::size_t>(j)], Zeta24(p * j)});
  out.push_back({reps.back(), Zeta24((e / 24) % 2 == 0 ? 0 : 12)});
  return out;
}

std::vector<CosetRepValue> c_values_from_factorizations(long p, const MultSys& ms, const MultSys& ms_prime) {
  const auto reps = coset_reps(p);
  const Mat2Z alpha(1, 0, 0, p);
  std::vector<CosetRepValue> out;
  for (long j = 0; j < p; ++j) {
    const Mat2Z tj = mat_pow(mats::T(), j);
    if (!(alpha * tj == reps[static_cast<std::size_t>(j)])) throw std::logic_error("beta_j != alpha T^j");
    out.push_back({reps[static_cast<std::size_t>(j)], chi_eval(tj, ms_prime)});
  }
  const Mat2Z g = mat_pow(mats::T(), (p + 1) / 2) * mat_pow(mats::R(), -1);
  const Mat2Z left = -g;
  if (!(left * alpha * g == reps.back())) throw std::logic_error("beta_inf factorization does not hold");
  out.push_back({reps.back(), chi_eval(left, ms) * chi_eval(g, ms_prime)});
  return out;
}

Cplx slash_value(const RatFunction& f, const Mat2Z& beta, int weight, const Rat& x) {
  const Rat den = Rat(beta.c) * x + Rat(beta.d);
  if (sgn(den) == 0) throw std::domain_error("slash: x = " + to_string(x) + " is a pole of " + to_string(beta));
  const Rat image = (Rat(beta.a) * x + Rat(beta.b)) / den;
  const double scale = std::pow(std::abs(den.get_d()), -weight);
  return scale * f(image);
}

RatFunction apply_general_hecke(RatFunction f, long p, const MultSys& ms, const MultSys& ms_prime, int weight) {
  auto terms = c_values_from_factorizations(p, ms, ms_prime);
  return [f = std::move(f), terms = std::move(terms), weight](const Rat& x) {
    Cplx acc;
    for (const auto& [beta, c] : terms) acc += zeta_to_cplx(c.inverse()) * slash_value(f, beta, weight, x);
    return acc;
  };
}

}  // namespace qmflab
