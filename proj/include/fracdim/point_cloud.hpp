#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fracdim/sample_path.hpp"

namespace fracdim::metrics {

/// Largest ambient dimension supported by the grid-based kernels.
inline constexpr std::size_t kMaxCloudDim = 8;

/// Finite point set in R^m, stored row-major, with its exact bounding box.
class PointCloud {
 public:
  PointCloud(std::size_t dim, std::vector<double> coords, std::string source = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ ? coords_.size() / dim_ : 0; }
  bool empty() const noexcept { return coords_.empty(); }
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  std::span<const double> lower() const noexcept { return lower_; }
  std::span<const double> upper() const noexcept { return upper_; }
  const std::string& source() const noexcept { return source_; }

  /// Points with the given indices, in the given order.
  PointCloud subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::string source_;
};

enum class Component { bm, drift, combined };

const char* to_string(Component c) noexcept;

/// {h(t_i)} for h = B, f or B+f.
PointCloud image_cloud(const sim::SamplePath& path, Component which);
/// {(t_i, h(t_i))} in R^{1+d}.
PointCloud graph_cloud(const sim::SamplePath& path, Component which);
/// The grid times as a cloud in R^1.
PointCloud time_cloud(const sim::TimeGrid& grid);

}  // namespace fracdim::metrics
