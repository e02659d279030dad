#pragma once

#include <cstddef>
#include <vector>

#include "fracdim/point_cloud.hpp"

namespace fracdim::metrics {

struct ThinningResult {
  std::vector<std::size_t> selected;    // pairwise >= 2 eps apart, scan order
  std::vector<std::size_t> collisions;  // N_i = #{j != i : |y_i - y_j| < 2 eps}
  std::size_t good_count = 0;           // #{i : N_i < threshold}
};

/// Transfers a packing through a perturbation. Point i is good when its
/// collision count N_i is below `threshold`; good points are scanned in order
/// and each one not yet removed is selected, removing every point within
/// 2*epsilon of it. The selection has size >= good_count / (threshold + 1).
ThinningResult good_point_thinning(const PointCloud& points, double epsilon, double threshold);

/// c * log(1/epsilon)^{d+1}, floored at 1.
double default_thinning_threshold(double epsilon, std::size_t d, double c = 2.0);

}  // namespace fracdim::metrics
