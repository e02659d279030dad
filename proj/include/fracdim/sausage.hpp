#pragma once

#include "fracdim/point_cloud.hpp"

namespace fracdim::metrics {

/// Grid estimate of vol(union of closed r-balls around the cloud points).
///
/// Cells of side `cell_side` are anchored at the origin; a cell counts when
/// its centre lies within distance r of some point. The result is
/// count * cell_side^m, an exact function of the occupied cell set, so it is
/// monotone in r and subadditive over splits of the cloud for a fixed
/// cell_side. Requires m in {1,2,3}; throws Error("dimension-unsupported").
double sausage_volume_on_grid(const PointCloud& cloud, double r, double cell_side);

/// sausage_volume_on_grid with cell_side = r / refine, refine >= 2.
double sausage_volume(const PointCloud& cloud, double r, int refine);

}  // namespace fracdim::metrics
