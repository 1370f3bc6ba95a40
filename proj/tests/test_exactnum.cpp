#include <gtest/gtest.h>

#include "qmflab/exactnum.hpp"
#include "qmflab/linalg.hpp"

using namespace qmflab;

TEST(ExactNum, NormalizeAndFormat) {
  EXPECT_EQ(to_string(rat_normalize(Int(6), Int(-4))), "-3/2");
  EXPECT_EQ(to_string(Rat(3)), "3/1");
  EXPECT_EQ(to_string(Rat(0)), "0/1");
  EXPECT_THROW(rat_normalize(Int(1), Int(0)), std::invalid_argument);
}

TEST(ExactNum, ParseRat) {
  EXPECT_EQ(parse_rat("-10/4"), Rat(-5, 2));
  EXPECT_EQ(parse_rat("7"), Rat(7));
  EXPECT_EQ(parse_rat("+3/9"), Rat(1, 3));
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("x"), std::invalid_argument);
}

TEST(ExactNum, IntegerHelpers) {
  EXPECT_EQ(nearest_quotient(Int(7), Int(2)), 4);
  EXPECT_EQ(nearest_quotient(Int(-7), Int(2)), -3);
  EXPECT_EQ(nearest_quotient(Int(5), Int(-3)), -2);
  EXPECT_EQ(mod_floor(Int(-7), Int(5)), 3);
  EXPECT_EQ(mod_floor(Int(7), Int(-5)), 2);
  EXPECT_EQ(ipow(Int(3), 5), 243);
  EXPECT_EQ(rpow(Rat(-2, 3), 3), Rat(-8, 27));
  EXPECT_EQ(gcd(Int(-12), Int(18)), 6);
  int primes = 0;
  for (long n = -3; n < 100; ++n) primes += is_prime(n);
  EXPECT_EQ(primes, 25);
}

TEST(ExactNum, Zeta24) {
  const Zeta24 z(1);
  EXPECT_EQ(z.pow(24), Zeta24(0));
  EXPECT_EQ(z.pow(-1), z.inverse());
  EXPECT_EQ(Zeta24(-5), Zeta24(19));
  EXPECT_EQ(Zeta24(7) * Zeta24(20), Zeta24(3));
  EXPECT_EQ(Zeta24::from_exponent(Int("1000000000000000000001")), Zeta24(17));
  EXPECT_EQ(Zeta24::from_exponent(Int(-1)), Zeta24(23));
  EXPECT_EQ(to_string(Zeta24(20)), "zeta24^20");
  EXPECT_EQ(parse_zeta24("zeta24^19"), Zeta24(19));
  EXPECT_EQ(zeta_to_cplx(Zeta24(6)), Cplx(0, 1));
  EXPECT_EQ(zeta_to_cplx(Zeta24(12)), Cplx(-1, 0));
  const Cplx w = zeta_to_cplx(Zeta24(1));
  EXPECT_NEAR(std::abs(std::pow(w, 24) - 1.0), 0.0, 1e-14);
}

TEST(ExactNum, Matrices) {
  const Mat2Z m(2, 3, 1, 2);
  EXPECT_EQ(m.det(), 1);
  EXPECT_EQ(m * m.inverse(), mats::identity());
  EXPECT_EQ(mat_pow(mats::T(), -3), Mat2Z(1, -3, 0, 1));
  EXPECT_EQ(mat_pow(mats::S(), 4), mats::identity());
  EXPECT_EQ(mat_pow(mats::U(), 3), -mats::identity());
  EXPECT_EQ(parse_mat("19,-7,30,-11"), Mat2Z(19, -7, 30, -11));
  EXPECT_EQ(to_string(Mat2Z(1, 0, 2, 1)), "(1,0;2,1)");
  EXPECT_THROW(Mat2Z(2, 0, 0, 1).inverse(), std::domain_error);
  EXPECT_THROW(parse_mat("1,2,3"), std::invalid_argument);
}

TEST(LinAlg, NullspaceAndSolve) {
  RatMatrix m;
  m.append_row({Rat(1), Rat(2), Rat(3)});
  m.append_row({Rat(2), Rat(4), Rat(6)});
  EXPECT_EQ(rank(m), 1u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    EXPECT_EQ(m.apply(v), (std::vector<Rat>{Rat(0), Rat(0)}));
    std::size_t lead = 0;
    while (sgn(v[lead]) == 0) ++lead;
    EXPECT_EQ(v[lead], 1);
  }

  RatMatrix a;
  a.append_row({Rat(2), Rat(1)});
  a.append_row({Rat(1), Rat(3)});
  EXPECT_EQ(solve_unique(a, {Rat(3), Rat(4)}), (std::vector<Rat>{Rat(1), Rat(1)}));
  EXPECT_THROW(solve_unique(m, {Rat(1), Rat(0)}), std::domain_error);
}
