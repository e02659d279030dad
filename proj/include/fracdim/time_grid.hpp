#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fracdim::sim {

struct UniformGrid {
  std::size_t n_points = 0;
};
struct PowerSetGrid {
  double beta = 1.0;
  std::uint64_t n_max = 1;
};
struct DyadicGrid {
  int level = 0;
};
struct CustomGrid {};

/// Which ideal subset of [0,1] a grid discretizes.
using GridDescriptor = std::variant<UniformGrid, PowerSetGrid, DyadicGrid, CustomGrid>;

std::string describe(const GridDescriptor& descriptor);

/// Finite, strictly increasing sample times in [0,1].
class TimeGrid {
 public:
  /// Throws Error("empty-grid") for no times and Error("bad-grid") when the
  /// times are not strictly increasing inside [0,1].
  TimeGrid(std::vector<double> times, GridDescriptor descriptor);

  /// n_points equally spaced times i/(n_points-1); a single point is {0}.
  static TimeGrid uniform(std::size_t n_points);
  /// 2^level + 1 points k/2^level.
  static TimeGrid dyadic(int level);
  static TimeGrid custom(std::vector<double> times);

  std::span<const double> times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }
  double operator[](std::size_t i) const noexcept { return times_[i]; }
  const GridDescriptor& descriptor() const noexcept { return descriptor_; }

  /// L when the times are exactly {k/2^L : k = 0..2^L}.
  std::optional<int> dyadic_level() const;

 private:
  std::vector<double> times_;
  GridDescriptor descriptor_;
};

}  // namespace fracdim::sim
