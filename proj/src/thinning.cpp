#include "fracdim/thinning.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cell_grid.hpp"

namespace fracdim::metrics {

ThinningResult good_point_thinning(const PointCloud& points, double epsilon, double threshold) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error("bad-scale", std::to_string(epsilon));
  if (!(threshold > 0.0)) throw Error("bad-threshold", "threshold must be positive");
  ThinningResult result;
  const std::size_t n = points.size();
  if (n == 0) return result;

  const double sep = 2.0 * epsilon;
  const double sep_sq = sep * sep;
  const auto offsets = detail::neighbour_offsets(points.dim());
  std::unordered_map<detail::CellKey, std::vector<std::size_t>, detail::CellKeyHash> cells;
  std::vector<detail::CellKey> cell_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    cell_of[i] = detail::cell_of(points.point(i), sep);
    cells[cell_of[i]].push_back(i);
  }
  auto for_each_close = [&](std::size_t i, auto&& fn) {
    const auto p = points.point(i);
    for (const auto& off : offsets) {
      const auto it = cells.find(detail::add(cell_of[i], off));
      if (it == cells.end()) continue;
      for (std::size_t j : it->second) {
        if (j != i && detail::distance_sq(p, points.point(j)) < sep_sq) fn(j);
      }
    }
  };

  result.collisions.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for_each_close(i, [&](std::size_t) { ++result.collisions[i]; });
  }
  std::vector<char> removed(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(static_cast<double>(result.collisions[i]) < threshold)) continue;
    ++result.good_count;
    if (removed[i]) continue;
    result.selected.push_back(i);
    removed[i] = 1;
    for_each_close(i, [&](std::size_t j) { removed[j] = 1; });
  }
  return result;
}

double default_thinning_threshold(double epsilon, std::size_t d, double c) {
  if (!(epsilon > 0.0)) throw Error("bad-scale", std::to_string(epsilon));
  const double base = std::log(1.0 / epsilon);
  return std::max(1.0, c * std::pow(std::max(base, 0.0), static_cast<double>(d + 1)));
}

}  // namespace fracdim::metrics
