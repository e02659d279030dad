#include <gtest/gtest.h>

#include <cmath>

#include "fracdim/drift.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using fracdim::sim::DriftSpec;
using fracdim::sim::eval_drift;
using fracdim::sim::psi;
using testing_support::error_code;

TEST(Drift, ZeroIsZero) {
  for (double t : {0.0, 0.3, 1.0}) {
    std::vector<double> out(3, 7.0);
    eval_drift(DriftSpec::zero(), t, out);
    EXPECT_EQ(out, std::vector<double>(3, 0.0));
  }
}

TEST(Drift, Linear) {
  EXPECT_EQ(eval_drift(DriftSpec::linear({2.0}), 0.25), std::vector<double>{0.5});
  std::vector<double> out(2);
  eval_drift(DriftSpec::linear({2.0, -4.0}), 0.25, out);
  EXPECT_EQ(out, (std::vector<double>{0.5, -1.0}));
}

TEST(Drift, PsiSixteenAtOneThirtySecond) {
  // phi(16/32) = 0.5, floor(4 * 0.5) = 2, 2 * 16^{-3/4} = 0.25.
  EXPECT_DOUBLE_EQ(psi(16, 1.0 / 32.0), 0.25);
}

TEST(Drift, PsiFourIsConstantUnderRightLimits) {
  const double c = std::pow(4.0, -0.75);
  EXPECT_NEAR(c, 0.3535534, 1e-7);
  for (int i = 0; i < (1 << 14); ++i) {
    ASSERT_EQ(psi(4, std::ldexp(i, -14)), c) << i;
  }
}

TEST(Drift, PsiSixteenRange) {
  for (int i = 0; i <= 4096; ++i) {
    const double v = psi(16, i / 4096.0);
    ASSERT_TRUE(v == 0.25 || v == 0.375) << i << " " << v;
  }
}

TEST(Drift, PsiMatchesIntegerOracleOnItsGrid) {
  // n = 4^a is constant on every [i n^{-3/2}, (i+1) n^{-3/2}).
  for (int a = 1; a <= 5; ++a) {
    const std::uint64_t n = std::uint64_t{1} << (2 * a);
    const double unit = std::pow(static_cast<double>(n), -0.75);
    for (std::uint64_t i = 0; i <= (std::uint64_t{1} << (3 * a)); ++i) {
      const double x = std::ldexp(static_cast<double>(i), -3 * a);
      ASSERT_EQ(psi(n, x), static_cast<double>(oracle::psi_level(a, i)) * unit) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Drift, RightContinuousAtPsiJumps) {
  // Jumps of psi_64 sit on multiples of 64^{-3/2} = 2^-9.
  for (int i = 0; i < 512; ++i) {
    const double t = std::ldexp(i, -9);
    for (int h : {20, 24}) {
      ASSERT_EQ(psi(64, t), psi(64, t + std::ldexp(1.0, -h))) << i;
    }
  }
}

TEST(Drift, LacunarySumsTerms) {
  const auto spec = DriftSpec::lacunary({64, 256, 1024}, 2, 0.5);
  for (double t : {0.0, 0.1, 0.37, 0.999}) {
    EXPECT_EQ(eval_drift(spec, t)[0], psi(64, t) + psi(256, t));
  }
  EXPECT_EQ(error_code([] { DriftSpec::lacunary({4, 4}, 1, 0.0); }), "bad-drift");
  EXPECT_EQ(error_code([] { DriftSpec::lacunary({0}, 1, 0.0); }), "bad-drift");
  EXPECT_EQ(error_code([] { DriftSpec::lacunary({4}, 2, 0.0); }), "bad-drift");
}

TEST(Drift, ScalarDriftsBroadcast) {
  std::vector<double> out(3);
  eval_drift(DriftSpec::psi(16), 1.0 / 32.0, out);
  EXPECT_EQ(out, std::vector<double>(3, 0.25));
  eval_drift(DriftSpec::linear({2.0}), 0.5, out);
  EXPECT_EQ(out, std::vector<double>(3, 1.0));
}

TEST(Drift, TableIsRightContinuousStep) {
  const auto spec = DriftSpec::table({0.25, 0.5}, {1.0, 2.0}, 1);
  EXPECT_EQ(eval_drift(spec, 0.0)[0], 0.0);
  EXPECT_EQ(eval_drift(spec, 0.2499)[0], 0.0);
  EXPECT_EQ(eval_drift(spec, 0.25)[0], 1.0);
  EXPECT_EQ(eval_drift(spec, 0.4999)[0], 1.0);
  EXPECT_EQ(eval_drift(spec, 0.5)[0], 2.0);
  EXPECT_EQ(eval_drift(spec, 1.0)[0], 2.0);
}

TEST(Drift, Continuity) {
  EXPECT_TRUE(DriftSpec::zero().is_continuous());
  EXPECT_TRUE(DriftSpec::linear({5.0}).is_continuous());
  EXPECT_FALSE(DriftSpec::psi(64).is_continuous());
  EXPECT_TRUE(DriftSpec::lacunary({64}, 0, 0.0).is_continuous());
  EXPECT_FALSE(DriftSpec::lacunary({64}, 1, 0.0).is_continuous());
  EXPECT_TRUE(DriftSpec::table({0.0, 0.5}, {1.0, 1.0}, 1).is_continuous());
  EXPECT_FALSE(DriftSpec::table({0.0, 0.5}, {1.0, 2.0}, 1).is_continuous());
  EXPECT_FALSE(DriftSpec::table({0.5}, {1.0}, 1).is_continuous());
  EXPECT_TRUE(DriftSpec::table({0.5}, {0.0}, 1).is_continuous());
}

TEST(Drift, Errors) {
  EXPECT_EQ(error_code([] { eval_drift(DriftSpec::zero(), 1.5); }), "time-out-of-range");
  EXPECT_EQ(error_code([] { eval_drift(DriftSpec::zero(), -0.1); }), "time-out-of-range");
  EXPECT_EQ(error_code([] {
              std::vector<double> out(3);
              eval_drift(DriftSpec::linear({1.0, 2.0}), 0.5, out);
            }),
            "dim-mismatch");
  EXPECT_EQ(error_code([] { DriftSpec::psi(0); }), "bad-drift");
  EXPECT_EQ(error_code([] { DriftSpec::table({0.5, 0.2}, {1.0, 2.0}, 1); }), "bad-drift");
}
