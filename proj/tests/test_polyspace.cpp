#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qmflab/polyspace.hpp"

using namespace qmflab;

namespace {

HomPoly random_poly(int w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  std::vector<Rat> c;
  for (int i = 0; i <= w; ++i) c.emplace_back(d(rng), 1 + std::abs(d(rng)));
  for (auto& x : c) x.canonicalize();
  return HomPoly(w, c);
}

Mat2Z random_word(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 6), pick(0, 2);
  Mat2Z m = mats::identity();
  const Mat2Z gens[] = {mats::S(), mats::T(), mat_pow(mats::T(), -1)};
  for (int i = len(rng); i > 0; --i) m = m * gens[pick(rng)];
  return m;
}

}  // namespace

TEST(PolySpace, SlashIsRightAction) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(8, rng);
    const auto a = random_word(rng), b = random_word(rng);
    EXPECT_EQ(slash(p, a * b), slash(slash(p, a), b));
  }
  // P|M = P(aX + bY, cX + dY)
  const auto x = HomPoly::monomial(1, 1);
  EXPECT_EQ(slash(x, Mat2Z(2, 3, 5, 7)), HomPoly(1, {Rat(3), Rat(2)}));
}

TEST(PolySpace, WeightTenBasis) {
  const auto minus = basis_W(10, Parity::odd);
  ASSERT_EQ(minus.size(), 1u);
  std::vector<Rat> c(11);
  c[1] = 1;
  c[3] = Rat(-25, 4);
  c[5] = Rat(21, 2);
  c[7] = Rat(-25, 4);
  c[9] = 1;
  EXPECT_EQ(minus[0], HomPoly(10, c));

  const auto plus = basis_W(10, Parity::even);
  ASSERT_EQ(plus.size(), 2u);
  std::vector<HomPoly> span = plus;
  std::vector<Rat> e(11);
  e[8] = 1;
  e[6] = -3;
  e[4] = 3;
  e[2] = -1;
  span.push_back(HomPoly(10, e));
  std::vector<Rat> f(11);
  f[10] = 1;
  f[0] = -1;
  span.push_back(HomPoly(10, f));
  EXPECT_EQ(poly_rank(span), 2u);
}

TEST(PolySpace, DimensionsMatchCuspForms) {
  for (int w = 2; w <= 24; w += 2) {
    const int s = oracle::dim_cusp_brute(w + 2);
    EXPECT_EQ(dim_cuspforms(w + 2), s) << w;
    EXPECT_EQ(basis_W(w, Parity::odd).size(), static_cast<std::size_t>(s)) << w;
    EXPECT_EQ(basis_W(w, Parity::even).size(), static_cast<std::size_t>(s + 1)) << w;
    EXPECT_EQ(basis_U(w, Parity::odd).size(), basis_W(w, Parity::odd).size()) << w;
    for (const auto& p : basis_W(w, Parity::both)) EXPECT_TRUE(satisfies_period_relations(p));
    EXPECT_EQ(poly_rank(basis_W(w, Parity::both)), basis_W(w, Parity::both).size());
  }
  EXPECT_EQ(dim_cuspforms(4), 0);
  EXPECT_EQ(dim_cuspforms(12), 1);
  EXPECT_EQ(dim_cuspforms(26), 1);
}

TEST(PolySpace, USpaceConditions) {
  EXPECT_TRUE(basis_U(2, Parity::odd).empty());
  for (int w : {2, 6, 10}) {
    auto hk = HomPoly::monomial(w, w) - HomPoly::monomial(w, 0);
    auto u = basis_U(w, Parity::even);
    const auto before = poly_rank(u);
    u.push_back(hk);
    EXPECT_EQ(poly_rank(u), before) << "h^w - k^w in U_w^+, w=" << w;
    for (const auto& g : basis_U(w, Parity::both)) {
      // g(h+k, k) + g(h, h+k) = g(h, k) and g(1, 1) = 0
      EXPECT_EQ(slash(g, Mat2Z(1, 0, 1, 1)) + slash(g, Mat2Z(1, 1, 0, 1)), g);
      EXPECT_EQ(g(Int(1), Int(1)), 0);
    }
  }
  EXPECT_THROW(basis_U(3, Parity::both), std::invalid_argument);
}

TEST(PolySpace, ParityProjection) {
  const HomPoly p(2, {Rat(0), Rat(1), Rat(1)});  // X^2 + XY
  EXPECT_EQ(parity_project(p, Parity::even), HomPoly::monomial(2, 2));
  EXPECT_EQ(parity_project(p, Parity::odd), HomPoly::monomial(2, 1));
  std::mt19937_64 rng(3);
  const auto q = random_poly(9, rng);
  EXPECT_EQ(parity_project(q, Parity::even) + parity_project(q, Parity::odd), q);
  EXPECT_EQ(parse_parity("+"), Parity::even);
  EXPECT_EQ(parse_parity("-"), Parity::odd);
  EXPECT_THROW(parse_parity("x"), std::invalid_argument);
}

TEST(PolySpace, Interpolation) {
  std::mt19937_64 rng(11);
  const auto p = random_poly(6, rng);
  std::vector<std::pair<Int, Int>> nodes;
  std::vector<Rat> vals;
  for (long j = 1; j <= 10; ++j) {
    nodes.emplace_back(Int(1), Int(j - 4));
    vals.push_back(p(Int(1), Int(j - 4)));
  }
  EXPECT_EQ(interpolate(6, nodes, vals), p);
  vals.back() += 1;
  EXPECT_THROW(interpolate(6, nodes, vals), std::domain_error);
}

TEST(PolySpace, ParseAndFormat) {
  const auto p = parse_coeffs(2, "1,-1/2,3");
  EXPECT_EQ(p, HomPoly(2, {Rat(1), Rat(-1, 2), Rat(3)}));
  EXPECT_EQ(coeff_strings(p), (std::vector<std::string>{"1/1", "-1/2", "3/1"}));
  EXPECT_THROW(parse_coeffs(2, "1,2"), std::invalid_argument);
}
