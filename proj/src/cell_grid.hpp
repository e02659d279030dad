#pragma once

// Integer cell indexing shared by the counting kernels.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fracdim/error.hpp"
#include "fracdim/point_cloud.hpp"
#include "fracdim/rng.hpp"

namespace fracdim::metrics::detail {

using CellKey = std::array<std::int64_t, kMaxCloudDim>;

struct CellKeyHash {
  std::size_t operator()(const CellKey& key) const noexcept {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::int64_t v : key) h = splitmix64(h ^ static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

inline std::int64_t checked_floor(double x) {
  const double f = std::floor(x);
  if (!(std::fabs(f) < 0x1.0p62)) throw Error("scale-overflow", "cell index out of range");
  return static_cast<std::int64_t>(f);
}

/// Index of the half-open cell [k side, (k+1) side) holding x. A quotient
/// within a few ulps of an integer k is a point on the boundary k side that
/// lost the tie to rounding, so it goes to cell k.
inline std::int64_t cell_index(double x, double side) {
  const double q = x / side;
  const double k = std::nearbyint(q);
  if (std::fabs(q - k) <= 4.0 * 0x1.0p-52 * std::fmax(1.0, std::fabs(q))) return checked_floor(k);
  return checked_floor(q);
}

/// Half-open cell [k side, (k+1) side) along each axis, anchored at the origin.
inline CellKey cell_of(std::span<const double> p, double side) {
  CellKey key{};
  for (std::size_t a = 0; a < p.size(); ++a) key[a] = cell_index(p[a], side);
  return key;
}

/// All offsets in {-1,0,1}^m.
inline std::vector<CellKey> neighbour_offsets(std::size_t m) {
  std::vector<CellKey> out;
  std::size_t total = 1;
  for (std::size_t a = 0; a < m; ++a) total *= 3;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    CellKey off{};
    std::size_t rest = code;
    for (std::size_t a = 0; a < m; ++a) {
      off[a] = static_cast<std::int64_t>(rest % 3) - 1;
      rest /= 3;
    }
    out.push_back(off);
  }
  return out;
}

inline CellKey add(const CellKey& a, const CellKey& b) noexcept {
  CellKey out{};
  for (std::size_t i = 0; i < kMaxCloudDim; ++i) out[i] = a[i] + b[i];
  return out;
}

inline double distance_sq(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline void require_counting_input(const PointCloud& cloud, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error("bad-scale", std::to_string(epsilon));
  if (cloud.empty()) throw Error("empty-cloud");
}

}  // namespace fracdim::metrics::detail
