#include <gtest/gtest.h>

#include <cmath>

#include "fracdim/constructions.hpp"
#include "fracdim/counting.hpp"
#include "fracdim/sample_path.hpp"
#include "fracdim/scale_series.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fracdim::metrics;
using testing_support::cloud;
using testing_support::error_code;

TEST(Packing, SpecExamples) {
  EXPECT_EQ(packing_number(cloud(1, {0.0, 0.5, 1.0}), 0.2), 3u);
  EXPECT_EQ(greedy_packing(cloud(1, {0.0, 0.5, 1.0}), 0.3), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(packing_number(cloud(2, std::vector<double>(200, 0.25)), 0.01), 1u);
  EXPECT_EQ(packing_number(cloud(2, std::vector<double>(200, 0.25)), 10.0), 1u);
}

TEST(Packing, ExactlyTwoEpsApartIsAllowed) {
  EXPECT_EQ(packing_number(cloud(1, {0.0, 0.5}), 0.25), 2u);
}

TEST(Packing, MatchesBruteForceOnSmallClouds) {
  // Greedy is one of the maximal separated subsets and never beats the maximum.
  const std::vector<double> xs{0.15, 0.0, 0.3, 0.62, 0.8, 0.41, 1.0};
  std::vector<oracle::Point> pts;
  for (double x : xs) pts.push_back({x});
  for (double eps : {0.05, 0.1, 0.13, 0.2}) {
    const auto kept = greedy_packing(cloud(1, xs), eps);
    const auto maximal = oracle::maximal_separated_subsets(pts, eps);
    EXPECT_NE(std::find(maximal.begin(), maximal.end(), [&] {
                auto k = kept;
                std::sort(k.begin(), k.end());
                return k;
              }()),
              maximal.end());
    EXPECT_LE(kept.size(), oracle::max_separated_subset(pts, eps));
  }
}

TEST(Packing, Errors) {
  EXPECT_EQ(error_code([] { packing_number(cloud(1, {0.0}), 0.0); }), "bad-scale");
  EXPECT_EQ(error_code([] { packing_number(cloud(1, {0.0}), -1.0); }), "bad-scale");
  EXPECT_EQ(error_code([] { packing_number(cloud(1, {}), 0.1); }), "empty-cloud");
}

TEST(BoxCount, SpecExamples) {
  EXPECT_EQ(box_count(cloud(1, {0.05, 0.15, 0.95}), 0.1), 3u);
  EXPECT_EQ(box_count(cloud(3, {0.3, -2.0, 5.0}), 1e-6), 1u);
  EXPECT_EQ(box_count(cloud(2, {0.0, 0.0, 0.09, 0.09, 0.11, 0.0}), 0.1), 2u);
}

TEST(BoxCount, HalfOpenCellsAndNegativeCoordinates) {
  EXPECT_EQ(box_count(cloud(1, {0.0, 0.25, 0.5, 0.75, 1.0}), 0.25), 5u);
  EXPECT_EQ(box_count(cloud(1, {-0.25, -0.01, 0.0}), 0.25), 2u);
}

TEST(BoxCount, BoundaryTiesGoToHigherCell) {
  // Values l * c with c irrational land on cell boundaries at eps = c.
  const double c = std::pow(1024.0, -0.75);
  std::vector<double> pts;
  for (int l = 0; l < 64; ++l) pts.push_back(l * c);
  EXPECT_EQ(box_count(cloud(1, pts), c), 64u);
}

TEST(BoxCount, Errors) {
  EXPECT_EQ(error_code([] { box_count(cloud(1, {0.0}), 0.0); }), "bad-scale");
  EXPECT_EQ(error_code([] { box_count(cloud(1, {}), 0.1); }), "empty-cloud");
  EXPECT_EQ(error_code([] { box_count(cloud(1, {1e300}), 1e-300); }), "scale-overflow");
}

TEST(BoxCount, PowerSetMatchesIntegerOracle) {
  const std::uint64_t n_max = 1 << 12;
  const auto grid = fracdim::analytic::gen_A_beta(1.0, n_max);
  const auto c = time_cloud(grid);
  for (int j = 0; j <= 16; ++j) {
    EXPECT_EQ(box_count(c, std::ldexp(1.0, -j)), oracle::a_beta1_box_count(n_max, j)) << j;
  }
}

TEST(BoxCount, PowerSetDimensionHalf) {
  const std::uint64_t n_max = 1 << 20;
  const auto c = time_cloud(fracdim::analytic::gen_A_beta(1.0, n_max));
  EXPECT_EQ(box_count(c, std::ldexp(1.0, -20)), oracle::a_beta1_box_count(n_max, 20));
  const auto est = estimate_dimension(scale_sweep(c, SeriesKind::box, 6, 18));
  EXPECT_GE(est.ls_slope, 0.45);
  EXPECT_LE(est.ls_slope, 0.55);
}

TEST(Oscillation, SpecExamples) {
  std::vector<double> constant(5, 0.7);
  EXPECT_EQ(oscillation_count(constant, 2, 2), 4u);
  std::vector<double> t(9), lin(9), twice(9);
  for (int i = 0; i <= 8; ++i) {
    t[i] = i / 8.0;
    lin[i] = t[i];
    twice[i] = 2.0 * t[i];
  }
  EXPECT_EQ(graph_box_count_oscillation(t, lin), 8u);
  EXPECT_EQ(graph_box_count_oscillation(t, twice), 16u);
}

TEST(Oscillation, CoarserScaleUsesClosedColumns) {
  // h = x on 2^4 intervals read at scale 2: each column spans 1/4 exactly.
  std::vector<double> v(17);
  for (int i = 0; i <= 16; ++i) v[i] = i / 16.0;
  EXPECT_EQ(oscillation_count(v, 4, 2), 4u);
  for (auto& x : v) x *= 3.0;
  EXPECT_EQ(oscillation_count(v, 4, 2), 12u);
}

TEST(Oscillation, Errors) {
  std::vector<double> v(6, 0.0);
  EXPECT_EQ(error_code([&] { oscillation_count(v, 2, 2); }), "not-dyadic-grid");
  std::vector<double> t{0.0, 0.3, 1.0}, h{0.0, 0.0, 0.0};
  EXPECT_EQ(error_code([&] { graph_box_count_oscillation(t, h); }), "not-dyadic-grid");
  std::vector<double> w(5, 0.0);
  EXPECT_EQ(error_code([&] { oscillation_count(w, 2, 3); }), "bad-scale");
}

TEST(Oscillation, PsiGraphCountsMatchOracle) {
  for (int a : {2, 4, 6}) {
    const auto c = fracdim::analytic::psi_graph_exact(std::uint64_t{1} << (2 * a));
    EXPECT_EQ(box_count(c, std::ldexp(1.0, -3 * a / 2)), oracle::psi_graph_count_even(a)) << a;
  }
  for (int a : {3, 5}) {
    const std::uint64_t n = std::uint64_t{1} << (2 * a);
    const auto c = fracdim::analytic::psi_graph_exact(n);
    EXPECT_EQ(box_count(c, std::pow(static_cast<double>(n), -0.75)), oracle::psi_graph_count_odd(a)) << a;
  }
}
