#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracdim/drift.hpp"
#include "fracdim/time_grid.hpp"

namespace fracdim::sim {

struct IncrementsMethod {};
struct LevyMethod {
  int depth = 0;
};
using GenerationMethod = std::variant<IncrementsMethod, LevyMethod>;

std::string describe(const GenerationMethod& method);

/// Grid values of a d-dimensional Brownian path B, a drift f and B + f.
/// Values are stored row-major: row i holds the d coordinates at grid time i.
class SamplePath {
 public:
  SamplePath(TimeGrid grid, std::size_t dim, std::vector<double> bm_values,
             std::vector<double> drift_values, std::uint64_t seed, GenerationMethod method,
             std::string drift_description = "zero");

  const TimeGrid& grid() const noexcept { return grid_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return grid_.size(); }
  std::uint64_t seed() const noexcept { return seed_; }
  const GenerationMethod& method() const noexcept { return method_; }
  const std::string& drift_description() const noexcept { return drift_description_; }

  std::span<const double> bm_values() const noexcept { return bm_; }
  std::span<const double> drift_values() const noexcept { return drift_; }
  std::span<const double> bm(std::size_t i) const noexcept {
    return std::span<const double>(bm_).subspan(i * dim_, dim_);
  }
  std::span<const double> drift(std::size_t i) const noexcept {
    return std::span<const double>(drift_).subspan(i * dim_, dim_);
  }
  double combined(std::size_t i, std::size_t c) const noexcept {
    return bm_[i * dim_ + c] + drift_[i * dim_ + c];
  }
  std::vector<double> combined_values() const;

 private:
  TimeGrid grid_;
  std::size_t dim_;
  std::vector<double> bm_;
  std::vector<double> drift_;
  std::uint64_t seed_;
  GenerationMethod method_;
  std::string drift_description_;
};

/// Brownian motion on `grid` from independent Gaussian increments.
/// Coordinate c draws from Stream(seed, c); increment i uses counter i.
/// B(t_0) is exactly zero when t_0 = 0, otherwise N(0, t_0).
SamplePath generate_bm(const TimeGrid& grid, std::size_t d, std::uint64_t seed);

/// Default cap on (2^depth + 1) * d stored values for levy_construct.
inline constexpr std::size_t kDefaultMaxValues = std::size_t{1} << 27;

/// Brownian motion on the dyadic grid of level `depth` by midpoint
/// displacement. B(0) = 0, B(1) ~ N(0,1), and refinement level k >= 1 adds an
/// independent N(0, 2^{-(k+1)}) to the average of the two neighbours at each
/// new midpoint. Each dyadic node owns its draw, so refining a seed keeps all
/// coarser values.
SamplePath levy_construct(int depth, std::size_t d, std::uint64_t seed,
                          std::size_t max_values = kDefaultMaxValues);

/// Returns a copy of `path` with drift_values = f(t_i). Throws
/// Error("dim-mismatch") when the drift dimension differs from the path's.
SamplePath apply_drift(const SamplePath& path, const DriftSpec& spec);

}  // namespace fracdim::sim
