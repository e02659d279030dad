#include "fracdim/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "cell_grid.hpp"

namespace fracdim::metrics {

using detail::CellKey;
using detail::CellKeyHash;

std::vector<std::size_t> greedy_packing(const PointCloud& cloud, double epsilon) {
  detail::require_counting_input(cloud, epsilon);
  const double sep = 2.0 * epsilon;
  const double sep_sq = sep * sep;
  const auto offsets = detail::neighbour_offsets(cloud.dim());
  std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> kept_by_cell;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    const CellKey cell = detail::cell_of(p, sep);
    bool blocked = false;
    for (const auto& off : offsets) {
      const auto it = kept_by_cell.find(detail::add(cell, off));
      if (it == kept_by_cell.end()) continue;
      for (std::size_t k : it->second) {
        if (detail::distance_sq(p, cloud.point(k)) < sep_sq) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
    }
    if (!blocked) {
      kept_by_cell[cell].push_back(i);
      kept.push_back(i);
    }
  }
  return kept;
}

std::size_t packing_number(const PointCloud& cloud, double epsilon) {
  return greedy_packing(cloud, epsilon).size();
}

std::size_t box_count(const PointCloud& cloud, double epsilon) {
  detail::require_counting_input(cloud, epsilon);
  const std::size_t m = cloud.dim();
  const std::size_t n = cloud.size();

  // Linearise cell indices against the bounding box when the index space
  // fits in 64 bits; otherwise sort full keys.
  CellKey lo{}, extent{};
  double span_product = 1.0;
  for (std::size_t a = 0; a < m; ++a) {
    lo[a] = detail::cell_index(cloud.lower()[a], epsilon);
    extent[a] = detail::cell_index(cloud.upper()[a], epsilon) - lo[a] + 1;
    span_product *= static_cast<double>(extent[a]);
  }
  if (span_product < 0x1.0p63) {
    std::vector<std::uint64_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = cloud.point(i);
      std::uint64_t key = 0;
      for (std::size_t a = 0; a < m; ++a) {
        const auto idx = static_cast<std::uint64_t>(detail::cell_index(p[a], epsilon) - lo[a]);
        key = key * static_cast<std::uint64_t>(extent[a]) + idx;
      }
      keys[i] = key;
    }
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  }
  std::vector<CellKey> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = detail::cell_of(cloud.point(i), epsilon);
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::size_t oscillation_count(std::span<const double> values, int level, int scale) {
  if (level < 0 || level > 40 || values.size() != (std::size_t{1} << level) + 1) {
    throw Error("not-dyadic-grid", "expected 2^level + 1 values");
  }
  if (scale < 0 || scale > level) throw Error("bad-scale", "scale must lie in [0, level]");
  const std::size_t columns = std::size_t{1} << scale;
  const std::size_t width = std::size_t{1} << (level - scale);
  std::size_t total = 0;
  for (std::size_t k = 0; k < columns; ++k) {
    const auto first = values.begin() + static_cast<std::ptrdiff_t>(k * width);
    const auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(width + 1));
    const double omega = std::ceil(std::ldexp(*hi - *lo, scale));
    total += std::max<std::size_t>(1, static_cast<std::size_t>(omega));
  }
  return total;
}

std::size_t graph_box_count_oscillation(std::span<const double> times,
                                        std::span<const double> values) {
  const std::size_t intervals = times.size() > 0 ? times.size() - 1 : 0;
  if (intervals == 0 || !std::has_single_bit(intervals) || values.size() != times.size()) {
    throw Error("not-dyadic-grid", "need 2^n + 1 samples on [0,1]");
  }
  const int level = std::countr_zero(intervals);
  for (std::size_t i = 0; i <= intervals; ++i) {
    if (times[i] != std::ldexp(static_cast<double>(i), -level)) {
      throw Error("not-dyadic-grid", "times are not k/2^n");
    }
  }
  return oscillation_count(values, level, level);
}

}  // namespace fracdim::metrics
