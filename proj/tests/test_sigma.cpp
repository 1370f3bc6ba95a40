#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmflab/sigma.hpp"

using namespace qmflab;

namespace {

Cplx zeta(long e) { return zeta_to_cplx(Zeta24(e)); }

}  // namespace

TEST(SigmaSeries, IdentityAndCoefficients) {
  for (int n : {7, 50}) {
    const auto s = series_identity_check(n);
    EXPECT_TRUE(s.pass()) << n;
    EXPECT_EQ(s.order, n);
    ASSERT_EQ(s.hypergeometric.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(s.hypergeometric, s.andrews);
  }
  const auto s = series_identity_check(7);
  const std::vector<Int> first{1, 1, -1, 2, -2, 1, 0, 1};
  EXPECT_EQ(s.hypergeometric, first);
  EXPECT_EQ(s.hypergeometric[6], 0);
}

TEST(SigmaSeries, RealArgumentOracle) {
  const auto s = series_identity_check(120);
  for (long double q : {0.1L, 0.3L, 0.5L}) {
    long double acc = 0, qn = 1;
    for (const auto& c : s.hypergeometric) {
      acc += c.get_d() * qn;
      qn *= q;
    }
    EXPECT_NEAR(static_cast<double>(acc), static_cast<double>(oracle::sigma_hypergeometric_real(q, 80)), 1e-12);
  }
}

TEST(SigmaRoots, MatchesDirectSum) {
  for (long h = 1; h <= 40; ++h)
    for (long k = 0; k < h; ++k) {
      if (std::gcd(k, h) != 1) continue;
      const auto direct = oracle::andrews_direct(k, h, h);
      const auto doubled = oracle::andrews_direct(k, h, 2 * h);
      EXPECT_LT(std::abs(direct - doubled), 1e-12L);
      const Cplx mine = sigma_at_root(Int(k), Int(h));
      EXPECT_NEAR(std::abs(mine - Cplx(static_cast<double>(direct.real()), static_cast<double>(direct.imag()))), 0.0,
                  1e-10 * std::max(1.0, std::abs(mine)))
          << k << "/" << h;
    }
  EXPECT_NEAR(std::abs(sigma_at_root(Int(0), Int(1)) - Cplx(2, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(sigma_at_root(Int(1), Int(2)) - Cplx(-2, 0)), 0.0, 1e-14);
}

TEST(SigmaRoots, ReductionInvariance) {
  for (long h : {7L, 12L, 31L}) {
    for (long k = 1; k < h; ++k) {
      const Cplx a = sigma_at_root(Int(k), Int(h));
      EXPECT_EQ(a, sigma_at_root(Int(k + 5 * h), Int(h)));
      EXPECT_EQ(a, sigma_at_root(Int(k - 3 * h), Int(h)));
      const long g = std::gcd(k, h);
      EXPECT_EQ(a, sigma_at_root(Int(k / g), Int(h / g)));
      EXPECT_EQ(a, sigma_at_root(Int(3 * k), Int(3 * h)));
    }
  }
}

TEST(SigmaRoots, LargeCancellationUsesMultiprecision) {
  SigmaTrace small, large;
  (void)sigma_at_root(Int(2), Int(5), {}, &small);
  EXPECT_FALSE(small.multiprecision);
  const Cplx v = sigma_at_root(Int(1), Int(2000), {}, &large);
  EXPECT_TRUE(large.multiprecision);
  EXPECT_GT(large.bits, 64);
  EXPECT_GT(large.log_peak, 100.0);
  // real coefficients: sigma(conj q) = conj sigma(q)
  const Cplx w = sigma_at_root(Int(1999), Int(2000));
  EXPECT_NEAR(std::abs(w - std::conj(v)), 0.0, 1e-12 * std::abs(v));
  // the cocycle is continuous at 0 although f(1/n) is not small
  const Cplx h1 = cocycle_value(std::nullopt, Rat(1, 2000));
  const Cplx h2 = cocycle_value(std::nullopt, Rat(1, 2001));
  EXPECT_LT(std::abs(h1 - h2), 1e-3);
}

TEST(SigmaRoots, DomainErrors) {
  EXPECT_THROW(sigma_at_root(Int(1), Int(0)), std::domain_error);
  EXPECT_THROW(sigma_at_root(Int(1), Int(-3)), std::domain_error);
  SigmaOptions tight;
  tight.max_den = 100;
  EXPECT_THROW(sigma_at_root(Int(1), Int(101), tight), std::domain_error);
  EXPECT_NO_THROW(sigma_at_root(Int(1), Int(100), tight));
}

TEST(QuantumF, Periodicity) {
  for (long h = 1; h <= 60; h += 7)
    for (long k = -h; k <= h; ++k) {
      const Rat x = rat_normalize(Int(k), Int(h));
      const Cplx f0 = f_eval(x), f1 = f_eval(x + 1);
      EXPECT_NEAR(std::abs(f1 - zeta(1) * f0), 0.0, 1e-12 * std::max(1.0, std::abs(f0)));
      EXPECT_EQ(f_eval(x + 24), f0);
    }
  const double t = 2 * std::numbers::pi / 24;
  EXPECT_NEAR(std::abs(f_eval(Rat(0)) - Cplx(2, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(f_eval(Rat(1, 2)) - (-2.0) * std::polar(1.0, t / 2)), 0.0, 1e-13);
}

TEST(HeckeSigma, PeriodicityAgainstScale) {
  const std::vector<Rat> xs{Rat(1, 3), Rat(-2, 7), Rat(5, 11), Rat(3, 8)};
  for (long p : {5L, 7L}) {
    for (const auto& x : xs) {
      const auto g0 = hecke_sigma_detail(p, x), g1 = hecke_sigma_detail(p, x + 1);
      EXPECT_LT(std::abs(g1.value - zeta(p) * g0.value), 1e-10 * g0.scale) << p << " " << to_string(x);
      EXPECT_EQ(g0.value, hecke_sigma(p, x));
    }
  }
}

TEST(HeckeSigma, NonDegenerateRelative) {
  // T_23 f does not vanish; compare relative to its own size
  for (const auto& x : {Rat(1, 3), Rat(2, 5), Rat(-3, 7)}) {
    const Cplx g0 = hecke_sigma(23, x), g1 = hecke_sigma(23, x + 1);
    ASSERT_GT(std::abs(g0), 1e-3);
    EXPECT_LT(std::abs(g1 - zeta(23) * g0), 1e-10 * std::abs(g0));
  }
  // T_73 f = 2 f
  for (const auto& x : {Rat(1, 4), Rat(-2, 9)}) {
    EXPECT_LT(std::abs(hecke_sigma(73, x) - 2.0 * f_eval(x)), 1e-10 * std::abs(f_eval(x)));
  }
}

TEST(HeckeSigma, FormalImage) {
  for (long p : {5L, 7L, 11L, 13L}) {
    const auto img = formal_hecke_sigma(p, 1500);
    EXPECT_TRUE(img.vanishes()) << p;
    EXPECT_GT(img.max_M, 1000);
  }
  const auto t73 = formal_hecke_sigma(73, 1500);
  ASSERT_TRUE(t73.eigenvalue.has_value());
  EXPECT_EQ(*t73.eigenvalue, 2);
  const auto t23 = formal_hecke_sigma(23, 1500);
  EXPECT_FALSE(t23.vanishes());
  EXPECT_FALSE(t23.eigenvalue.has_value());
}

TEST(HeckeSigma, Rejections) {
  EXPECT_THROW(hecke_sigma(3, Rat(1, 2)), std::domain_error);
  EXPECT_THROW(hecke_sigma(4, Rat(1, 2)), std::domain_error);
  EXPECT_THROW(hecke_sigma(25, Rat(1, 2)), std::domain_error);
}

TEST(Probe, CocycleValueUsesAbsoluteValue) {
  const Rat x(-7, 10);  // 2x + 1 = -2/5
  const Cplx expect = f_eval(x / (2 * x + 1)) / 0.4 - zeta(1) * f_eval(x);
  EXPECT_NEAR(std::abs(cocycle_value(std::nullopt, x) - expect), 0.0, 1e-12 * std::abs(expect));
  const Cplx g = hecke_sigma(23, x / (2 * x + 1)) / 0.4 - zeta(23) * hecke_sigma(23, x);
  EXPECT_NEAR(std::abs(cocycle_value(23L, x) - g), 0.0, 1e-12 * std::abs(g));
}

TEST(Probe, ChainsDecreaseAndNearSingularIsFlagged) {
  ProbeConfig cfg;
  cfg.m_min = 2;
  cfg.m_max = 4;
  cfg.bases = {Rat(1, 5), Rat(-3, 10), Rat(-4999, 10000)};
  const auto rep = cocycle_probe(std::nullopt, cfg);
  ASSERT_EQ(rep.chains.size(), 3u);
  EXPECT_TRUE(rep.chains[0].decreasing());
  EXPECT_TRUE(rep.chains[1].decreasing());
  EXPECT_TRUE(rep.chains[2].near_singular);
  EXPECT_FALSE(rep.chains[2].note.empty());
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.chains[0].xs.size(), 3u);
  EXPECT_EQ(rep.chains[0].xs.front(), Rat(1, 5) + Rat(1, 100));
  EXPECT_EQ(default_probe_bases().size(), 11u);
}
