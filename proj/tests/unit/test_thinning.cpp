#include <gtest/gtest.h>

#include <cmath>

#include "fracdim/counting.hpp"
#include "fracdim/thinning.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace fracdim::metrics;
using testing_support::cloud;
using testing_support::error_code;

TEST(Thinning, SeparatedPointsAllSelected) {
  const auto r = good_point_thinning(cloud(1, {0.0, 1.0, 2.0, 3.0, 4.0}), 0.1, 1.0);
  EXPECT_EQ(r.selected.size(), 5u);
  EXPECT_EQ(r.good_count, 5u);
  EXPECT_EQ(r.collisions, std::vector<std::size_t>(5, 0));
}

TEST(Thinning, IdenticalPointsGiveOne) {
  const auto r = good_point_thinning(cloud(2, std::vector<double>(10, 0.3)), 0.1, 10.0);
  EXPECT_EQ(r.selected.size(), 1u);
  EXPECT_EQ(r.collisions, std::vector<std::size_t>(5, 4));
}

TEST(Thinning, HandTracedExample) {
  const std::vector<double> ys{0.0, 0.1, 0.5, 0.6, 2.0};
  const auto r = good_point_thinning(cloud(1, ys), 0.1, 2.0);
  EXPECT_EQ(r.collisions, (std::vector<std::size_t>{1, 1, 1, 1, 0}));
  EXPECT_EQ(r.good_count, 5u);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{0, 2, 4}));
  std::vector<oracle::Point> pts;
  for (double y : ys) pts.push_back({y});
  const auto maximal = oracle::maximal_separated_subsets(pts, 0.1);
  EXPECT_NE(std::find(maximal.begin(), maximal.end(), r.selected), maximal.end());
}

TEST(Thinning, CanExceedGreedyPacking) {
  // Greedy keeps 0.15 and drops both neighbours; thinning skips the crowded
  // 0.15 (N = 2 is not below 2) and keeps 0.0 and 0.3.
  const auto c = cloud(1, {0.15, 0.0, 0.3});
  EXPECT_EQ(packing_number(c, 0.1), 1u);
  const auto r = good_point_thinning(c, 0.1, 2.0);
  EXPECT_EQ(r.selected, (std::vector<std::size_t>{1, 2}));
  EXPECT_LE(r.selected.size(), oracle::max_separated_subset({{0.15}, {0.0}, {0.3}}, 0.1));
}

TEST(Thinning, DefaultThreshold) {
  EXPECT_DOUBLE_EQ(default_thinning_threshold(std::exp(-2.0), 1), 2.0 * 4.0);
  EXPECT_DOUBLE_EQ(default_thinning_threshold(std::exp(-2.0), 2, 3.0), 3.0 * 8.0);
  EXPECT_DOUBLE_EQ(default_thinning_threshold(0.9, 1), 1.0);
}

TEST(Thinning, Errors) {
  EXPECT_EQ(error_code([] { good_point_thinning(cloud(1, {0.0}), 0.0, 1.0); }), "bad-scale");
  EXPECT_EQ(error_code([] { good_point_thinning(cloud(1, {0.0}), 0.1, 0.0); }), "bad-threshold");
}
