#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "cylbif/inequalities.hpp"

using namespace cylbif;

TEST(TuranMargin, HalfIntegerClosedForm) {
  // nu = -1/2: (2 / (pi s)) (1 + sin(2 s) / (2 s)).
  for (double s = 0.05; s < 20.0; s += 0.173) {
    const double want = 2.0 / (std::numbers::pi * s) * (1.0 + std::sin(2 * s) / (2 * s));
    EXPECT_NEAR(turan_margin(Order(-0.5), s), want, 1e-12 * want) << s;
  }
}

TEST(TuranMargin, PositiveBelowSecondZero) {
  for (int n = 1; n <= 12; ++n) {
    const auto b = ball_spectrum(n);
    const auto r = turan_margin_scan(b, 0.0, b.j2, 20000);
    EXPECT_TRUE(r.passed) << "N=" << n << " min=" << r.min_margin << " at " << r.argmin;
    EXPECT_GT(r.min_margin, 0.0);
    EXPECT_EQ(r.n_points, 20000);
  }
}

TEST(TuranMargin, ScanRejectsBadIntervals) {
  const auto b = ball_spectrum(2);
  EXPECT_THROW(turan_margin_scan(b, 1.0, 0.5, 100), DomainError);
  EXPECT_THROW(turan_margin_scan(b, 0.0, b.j2 + 1.0, 100), DomainError);
  EXPECT_THROW(turan_margin_scan(b, 0.0, 1.0, 1), DomainError);
}

TEST(HMonotonicity, IdentityMatchesDifference) {
  for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.5}) {
    const Order o(nu);
    const double j1 = bessel_zero(o, ZeroIndex(1));
    for (double s = 0.2; s < j1 - 0.1; s += 0.137) {
      const double h = 1e-5;
      const double fd = (ratio_h(o, s + h) - ratio_h(o, s - h)) / (2 * h);
      EXPECT_NEAR(h_prime_identity(o, s), fd, 1e-6 * (1 + std::abs(fd))) << nu << " " << s;
    }
  }
}

TEST(HMonotonicity, IncreasingBelowFirstZero) {
  for (int n = 1; n <= 8; ++n) {
    const auto b = ball_spectrum(n);
    const auto r = h_monotonicity_scan(b, 0.01, b.j1 - 1e-3, 5000);
    EXPECT_TRUE(r.passed) << n;
  }
}

TEST(FMonotonicity, IncreasingUpToFifty) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = f_monotonicity_scan(Order(0.5 * n - 1.0), 1e-3, 50.0, 5000);
    EXPECT_TRUE(r.passed) << n << " " << r.min_margin;
  }
  EXPECT_THROW(f_monotonicity_scan(Order(0.0), 1.0, 60.0, 100), DomainError);
  EXPECT_THROW(f_monotonicity_scan(Order(0.0), 0.0, 10.0, 100), DomainError);
}

TEST(Bridge, IntervalAndMonotonicity) {
  for (int n = 3; n <= 8; ++n) {
    const auto b = ball_spectrum(n);
    const auto iv = bridge_interval(b);
    EXPECT_LE(iv.alpha, iv.beta);
    EXPECT_LT(iv.beta, b.j2);
    const auto r = bridge_monotonicity_scan(b, 5000);
    EXPECT_TRUE(r.passed) << n << " " << r.min_margin;
  }
  EXPECT_THROW(bridge_interval(ball_spectrum(2)), DomainError);
}

TEST(Interlacing, HoldsForTauAtLeastMinusHalf) {
  const auto recs = interlacing_audit({-0.5, 0.0, 0.5, 1.0, 2.0, 3.5}, 10);
  for (const auto& r : recs) {
    EXPECT_TRUE(r.passed) << r.tau << " " << r.counterexample;
    EXPECT_FALSE(r.expected_failure);
  }
}

TEST(Interlacing, MinusOneIsTheDocumentedFailure) {
  const auto recs = interlacing_audit({-1.0}, 5);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0].expected_failure);
  EXPECT_FALSE(recs[0].passed);
  EXPECT_FALSE(recs[0].counterexample.empty());
  EXPECT_THROW(interlacing_audit({-0.8}, 5), DomainError);
  EXPECT_THROW(interlacing_audit({0.0}, 0), DomainError);
}
