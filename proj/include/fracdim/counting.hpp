#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fracdim/point_cloud.hpp"

namespace fracdim::metrics {

/// Greedy maximal 2*epsilon-separated subset: scan points in stored order and
/// keep a point iff its distance to every kept point is >= 2*epsilon.
/// Returns the kept indices in scan order.
///
/// The kept centres carry pairwise disjoint epsilon-balls, so the size is a
/// lower bound on the packing number P(A, epsilon); maximality makes it an
/// upper bound on the covering number at radius 2*epsilon.
std::vector<std::size_t> greedy_packing(const PointCloud& cloud, double epsilon);
std::size_t packing_number(const PointCloud& cloud, double epsilon);

/// Occupied cells of the origin-anchored grid of half-open cubes
/// [k eps, (k+1) eps)^m.
std::size_t box_count(const PointCloud& cloud, double epsilon);

/// Sum over the 2^scale dyadic columns of max(1, ceil(2^scale (max - min)))
/// where max/min run over the samples in the closed column. `values` must be
/// sampled at k/2^level, k = 0..2^level, with scale <= level.
std::size_t oscillation_count(std::span<const double> values, int level, int scale);

/// oscillation_count at the grid's own resolution. Throws
/// Error("not-dyadic-grid") unless times are exactly k/2^n, k = 0..2^n.
std::size_t graph_box_count_oscillation(std::span<const double> times,
                                        std::span<const double> values);

}  // namespace fracdim::metrics
