#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's counting code.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

inline double dist2(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

inline bool separated(const std::vector<Point>& pts, std::uint32_t mask, double sep) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if ((mask >> j & 1u) && dist2(pts[i], pts[j]) < sep * sep) return false;
    }
  }
  return true;
}

/// Size of a largest subset with pairwise distance >= 2 eps, by enumerating
/// all 2^n subsets. n <= 16.
inline std::size_t max_separated_subset(const std::vector<Point>& pts, double eps) {
  const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size > best && separated(pts, mask, 2.0 * eps)) best = size;
  }
  return best;
}

/// All maximal 2eps-separated subsets (no point can be added), as index sets.
inline std::vector<std::vector<std::size_t>> maximal_separated_subsets(const std::vector<Point>& pts,
                                                                        double eps) {
  const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!separated(pts, mask, 2.0 * eps)) continue;
    bool maximal = true;
    for (std::uint32_t i = 0; i < n && maximal; ++i) {
      if (!(mask >> i & 1u) && separated(pts, mask | (1u << i), 2.0 * eps)) maximal = false;
    }
    if (!maximal) continue;
    std::vector<std::size_t> idx;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) idx.push_back(i);
    }
    out.push_back(std::move(idx));
  }
  return out;
}

/// Exact box count of {0} u {1/n : 1 <= n <= n_max} at eps = 2^-j, using
/// integer division: 1/n lies in cell floor(2^j / n).
inline std::size_t a_beta1_box_count(std::uint64_t n_max, int j) {
  const std::uint64_t scale = std::uint64_t{1} << j;
  std::set<std::uint64_t> cells{0};
  for (std::uint64_t n = 1; n <= n_max; ++n) cells.insert(scale / n);
  return cells.size();
}

/// Level l of psi_n = n^{-3/4} l at x = i / n^{3/2} for n = 4^a (sqrt n = 2^a),
/// right-continuous. With r = i mod 2^a the fractional part of n x is r/2^a:
/// on the falling half the right limit of floor(2^a (1 - r/2^a)) is
/// 2^a - r - 1, on the rising half it is r.
inline std::uint64_t psi_level(int a, std::uint64_t i) {
  const std::uint64_t s = std::uint64_t{1} << a;
  const std::uint64_t r = i % s;
  return 2 * r < s ? s - r - 1 : r;
}

/// Exact box count of the psi_n graph (n = 4^a, a even so eps = n^{-3/4} is
/// dyadic) at eps = n^{-3/4}: column of x = i 2^{-3a} is i >> (3a/2), the
/// row is the level itself.
inline std::size_t psi_graph_count_even(int a) {
  const int level = 3 * a;
  const int shift = 3 * a / 2;
  std::set<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (std::uint64_t i = 0; i <= (std::uint64_t{1} << level); ++i) cells.insert({i >> shift, psi_level(a, i)});
  return cells.size();
}

/// Same for odd a, where eps = 2^{-3a/2} is irrational. In units of 2^{-3a}
/// the column width is m sqrt 2 with m = 2^{(3a-1)/2}, so x = i 2^{-3a} lies
/// in column k iff 2 k^2 m^2 <= i^2 < 2 (k+1)^2 m^2, compared in integers.
inline std::size_t psi_graph_count_odd(int a) {
  const int level = 3 * a;
  const std::uint64_t m = std::uint64_t{1} << ((3 * a - 1) / 2);
  std::set<std::pair<std::uint64_t, std::uint64_t>> cells;
  std::uint64_t k = 0;
  for (std::uint64_t i = 0; i <= (std::uint64_t{1} << level); ++i) {
    while (2 * (k + 1) * (k + 1) * m * m <= i * i) ++k;
    cells.insert({k, psi_level(a, i)});
  }
  return cells.size();
}

/// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace oracle
