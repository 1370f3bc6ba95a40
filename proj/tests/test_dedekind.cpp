#include <gtest/gtest.h>

#include <numeric>

#include "qmflab/dedekind.hpp"

using namespace qmflab;

namespace {

void expect_symbol_axioms(const Symbol& e, long range) {
  const int w = e.weight();
  const auto& g = e.reciprocity();
  for (long h = 1; h <= range; ++h)
    for (long k = -range; k <= range; ++k) {
      EXPECT_EQ(e(h, k + h), e(h, k)) << h << "," << k;
      EXPECT_EQ(e(3 * h, 3 * k), rpow(Rat(3), static_cast<unsigned long>(w)) * e(h, k));
      if (k > 0) EXPECT_EQ(e(h, k) - e(k, -h), g(Int(h), Int(k))) << h << "," << k;
    }
}

}  // namespace

TEST(Dedekind, BuiltinsAreReconstructible) {
  for (int w : {2, 4, 10}) {
    const auto hk = HomPoly::monomial(w, w) - HomPoly::monomial(w, 0);
    const auto f = reconstruct(hk, Rat(1));
    const auto g = reconstruct(HomPoly(w), Rat(1));
    for (long h = 1; h <= 12; ++h)
      for (long k = -15; k <= 15; ++k) {
        EXPECT_EQ(f(h, k), rpow(Rat(h), w));
        EXPECT_EQ(builtin_F(w)(h, k), rpow(Rat(h), w));
        const long d = std::gcd(h, k);
        EXPECT_EQ(g(h, k), rpow(Rat(d), w));
        EXPECT_EQ(builtin_G(w)(h, k), rpow(Rat(d), w));
      }
  }
}

TEST(Dedekind, ReconstructedSymbolAxioms) {
  for (int w : {2, 6, 10}) {
    for (const auto& g : basis_U(w, Parity::both)) {
      const auto e = reconstruct(g, Rat(-2, 7));
      EXPECT_EQ(e.c0(), Rat(-2, 7));
      EXPECT_EQ(e(1, 0), Rat(-2, 7));
      expect_symbol_axioms(e, 9);
      EXPECT_EQ(beta(e), g);
    }
  }
}

TEST(Dedekind, ReconstructRejectsBadReciprocity) {
  const auto bad = HomPoly::monomial(4, 2);
  EXPECT_FALSE(validate_reciprocity(bad));
  EXPECT_TRUE(reciprocity_defect(bad).has_value());
  EXPECT_THROW(reconstruct(bad), std::invalid_argument);
  EXPECT_TRUE(validate_reciprocity(HomPoly::p0(4)));
  EXPECT_FALSE(reciprocity_defect(HomPoly::p0(4)).has_value());
}

TEST(Dedekind, HeckeSymbolAxioms) {
  const auto basis = basis_U(10, Parity::both);
  for (long n : {2L, 3L, 5L}) {
    const auto e = hecke_symbol(reconstruct(basis.front(), Rat(1, 3)), n);
    EXPECT_EQ(e.kind(), Symbol::Kind::hecke_image);
    expect_symbol_axioms(e, 6);
    EXPECT_TRUE(validate_reciprocity(e.reciprocity()));
  }
  // T_n F_w(h, k) = sigma_{w+1}(n) h^w
  const auto t2 = hecke_symbol(builtin_F(2), 2);
  EXPECT_EQ(t2(5, 3), Rat((1 + 8) * 25));
}

TEST(Dedekind, MemoMatchesUncached) {
  const auto e = reconstruct(basis_U(10, Parity::odd).front(), Rat(0));
  for (long h = 1; h <= 40; h += 3)
    for (long k = -50; k <= 50; k += 7) EXPECT_EQ(e(h, k), e.eval_uncached(Int(h), Int(k)));
  EXPECT_GT(e.memo_size(), 0u);
  const auto before = e.memo_size();
  (void)e.eval_uncached(Int(997), Int(331));
  EXPECT_EQ(e.memo_size(), before);
  EXPECT_EQ(eval(e, Int(997), Int(331)), e.eval_uncached(Int(997), Int(331)));
}

TEST(Dedekind, LargeArguments) {
  const auto e = reconstruct(basis_U(6, Parity::both).back(), Rat(5));
  const Int h("1000000000000000000000007"), k("314159265358979323846");
  EXPECT_EQ(e(h, k + h), e(h, k));
  EXPECT_EQ(e(h, k) - e(k, Int(-h)), e.reciprocity()(h, k));
}

TEST(Dedekind, DomainErrors) {
  EXPECT_THROW(builtin_F(4)(0, 1), std::domain_error);
  EXPECT_THROW(reconstruct(HomPoly::p0(4))(-3, 1), std::domain_error);
  EXPECT_THROW(hecke_symbol(builtin_G(2), 2)(0, 5), std::domain_error);
}
