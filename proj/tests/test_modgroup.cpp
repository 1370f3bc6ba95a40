#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qmflab/modgroup.hpp"

using namespace qmflab;

namespace {

Mat2Z random_gamma02(std::mt19937_64& rng, int len = 8) {
  std::uniform_int_distribution<int> e(-3, 3), g(0, 1);
  Mat2Z m = mats::identity();
  for (int i = 0; i < len; ++i) m = m * mat_pow(g(rng) ? mats::T() : mats::R(), e(rng));
  return m;
}

// (a b; c d) in Gamma0(level) with c = level * r and d chosen coprime to c.
Mat2Z random_gamma0(long level, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> rd(-40, 40), dd(-500, 500);
  for (;;) {
    const Int c = Int(level) * rd(rng);
    const Int d = dd(rng);
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    if (g != 1) continue;
    // s d + t c = 1  ->  a = s, b = -t
    Mat2Z m(s, Int(-t), c, d);
    if (m.det() == 1) return m;
  }
}

}  // namespace

TEST(Gamma02, DecomposeRoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_gamma02(rng, 1 + i % 12);
    const auto w = decompose_gamma02(m);
    EXPECT_EQ(reassemble(w), m);
    const auto w2 = decompose_gamma02_perturbed(m, rng);
    EXPECT_EQ(reassemble(w2), m);
    EXPECT_EQ(chi_eval(w, MultSys::chi()), chi_eval(w2, MultSys::chi()));
  }
  for (int i = 0; i < 50; ++i) {
    const auto m = random_gamma0(2, rng);
    EXPECT_EQ(reassemble(decompose_gamma02(m)), m);
  }
}

TEST(Gamma02, ChiIsHomomorphism) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_gamma0(2, rng), b = random_gamma0(2, rng);
    EXPECT_EQ(chi_eval(a * b), chi_eval(a) * chi_eval(b));
    EXPECT_EQ(chi_eval(a.inverse()), chi_eval(a).inverse());
  }
  EXPECT_EQ(chi_eval(mats::T()), Zeta24(1));
  EXPECT_EQ(chi_eval(mats::R()), Zeta24(1));
  EXPECT_EQ(chi_eval(-mats::identity()), Zeta24(0));
  EXPECT_EQ(chi_eval(Mat2Z(19, -7, 30, -11)), Zeta24(20));
  EXPECT_EQ(chi_eval(mat_pow(mats::T(), 5) * mat_pow(mats::R(), -2), MultSys::chi().pow(5)), Zeta24(15));
}

TEST(Gamma02, Rejections) {
  EXPECT_THROW(decompose_gamma02(Mat2Z(1, 0, 1, 1)), std::invalid_argument);
  EXPECT_THROW(decompose_gamma02(Mat2Z(2, 0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(MultSys(Zeta24(1), Zeta24(2)), std::invalid_argument);
  EXPECT_NO_THROW(MultSys(Zeta24(1), Zeta24(13)));
  EXPECT_FALSE(in_gamma0(Mat2Z(1, 0, 3, 1), 2));
  EXPECT_TRUE(in_gamma0(Mat2Z(1, 0, 10, 1), 10));
}

TEST(Cosets, IndexAndTable) {
  for (long m = 1; m <= 60; ++m) {
    EXPECT_EQ(gamma0_index(m), oracle::gamma0_index_brute(m)) << m;
    const CosetTable t(m);
    EXPECT_EQ(static_cast<long>(t.size()), gamma0_index(m));
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.index_of(t.rep(i)), i);
      EXPECT_EQ(t.index_of(t.rep(i) * mats::S()), t.act_S(i));
      EXPECT_EQ(t.index_of(t.rep(i) * mats::T()), t.act_T(i));
    }
  }
}

TEST(Cosets, SchreierGeneratorsLieInGamma0) {
  for (long m : {2L, 10L, 14L, 26L, 106L}) {
    const auto gens = schreier_generators(m);
    EXPECT_FALSE(gens.empty());
    for (const auto& g : gens) {
      EXPECT_TRUE(in_gamma0(g, m)) << to_string(g);
      EXPECT_EQ(g.det(), 1);
    }
  }
}

TEST(Compat, ReferenceGenerators) {
  const auto ref = reference_gamma0_10_generators();
  ASSERT_EQ(ref.size(), 5u);
  for (const auto& [g, z] : ref) {
    EXPECT_TRUE(in_gamma0(g, 10));
    EXPECT_EQ(chi_eval(g), z) << to_string(g);
    EXPECT_TRUE(compat_pair(g, 5).ok()) << to_string(g);
  }
}

TEST(Compat, PrimesUpTo101) {
  for (long p = 5; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    const auto rep = compat_check(p, 20, static_cast<std::uint64_t>(p));
    EXPECT_TRUE(rep.pass()) << p;
    EXPECT_EQ(static_cast<long>(rep.cosets), gamma0_index(2 * p));
    EXPECT_EQ(rep.spot_failures, 0u);
  }
  EXPECT_THROW(compat_check(4), std::invalid_argument);
  EXPECT_THROW(compat_check(3), std::invalid_argument);
}

TEST(Compat, RandomElementsOfGamma0_2p) {
  std::mt19937_64 rng(5);
  for (long p : {5L, 7L, 11L, 13L, 23L, 73L}) {
    for (int i = 0; i < 100; ++i) {
      const auto g = random_gamma0(2 * p, rng);
      ASSERT_TRUE(in_gamma0(g, 2 * p));
      EXPECT_TRUE(compat_pair(g, p).ok()) << p << " " << to_string(g);
    }
  }
}

TEST(Hecke, CosetRepresentativesAndCValues) {
  for (long p : {5L, 7L, 11L, 13L, 29L}) {
    const auto reps = coset_reps(p);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(p + 1));
    const auto closed = c_values(p);
    const auto fact = c_values_from_factorizations(p, MultSys::chi(), MultSys::chi().pow(p));
    ASSERT_EQ(closed.size(), fact.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      EXPECT_EQ(closed[i].beta, reps[i]);
      EXPECT_EQ(fact[i].beta, reps[i]);
      EXPECT_EQ(closed[i].c, fact[i].c) << p << " " << i;
    }
    const long sign_exp = (p * p - 1) / 24 % 2 == 0 ? 0 : 12;
    EXPECT_EQ(closed.back().c, Zeta24(sign_exp));
  }
  EXPECT_THROW(coset_reps(2), std::invalid_argument);
  EXPECT_THROW(coset_reps(9), std::invalid_argument);
}

TEST(Hecke, SlashValue) {
  const RatFunction id = [](const Rat& x) { return Cplx(x.get_d(), 0); };
  EXPECT_NEAR(std::abs(slash_value(id, Mat2Z(1, 0, 0, 5), 1, Rat(2)) - Cplx(0.08, 0)), 0.0, 1e-15);
  EXPECT_THROW(slash_value(id, mats::S(), 1, Rat(0)), std::domain_error);
  // general Hecke image of a constant: sum_j c(beta_j)^-1 |c x + d|^-1
  const RatFunction one = [](const Rat&) { return Cplx(1, 0); };
  const auto g = apply_general_hecke(one, 5, MultSys::trivial(), MultSys::trivial());
  EXPECT_NEAR(std::abs(g(Rat(1, 3)) - Cplx(5.0 / 5 + 1, 0)), 0.0, 1e-12);
}
