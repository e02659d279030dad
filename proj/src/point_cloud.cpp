#include "fracdim/point_cloud.hpp"

#include <algorithm>
#include <cmath>

#include "fracdim/error.hpp"

namespace fracdim::metrics {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, std::string source)
    : dim_(dim), coords_(std::move(coords)), source_(std::move(source)) {
  if (dim_ == 0 || dim_ > kMaxCloudDim) {
    throw Error("dimension-unsupported", "cloud dimension " + std::to_string(dim_));
  }
  if (coords_.size() % dim_ != 0) throw Error("bad-cloud", "coordinate count not a multiple of dim");
  for (double v : coords_) {
    if (!std::isfinite(v)) throw Error("bad-cloud", "non-finite coordinate");
  }
  if (coords_.empty()) return;
  lower_.assign(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(dim_));
  upper_ = lower_;
  for (std::size_t i = dim_; i < coords_.size(); ++i) {
    const std::size_t a = i % dim_;
    lower_[a] = std::min(lower_[a], coords_[i]);
    upper_[a] = std::max(upper_[a], coords_[i]);
  }
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  std::vector<double> out;
  out.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    const auto p = point(i);
    out.insert(out.end(), p.begin(), p.end());
  }
  return PointCloud(dim_, std::move(out), source_ + "[subset]");
}

const char* to_string(Component c) noexcept {
  switch (c) {
    case Component::bm: return "B";
    case Component::drift: return "f";
    case Component::combined: return "B+f";
  }
  return "?";
}

namespace {
double component_value(const sim::SamplePath& path, Component which, std::size_t i, std::size_t c) {
  switch (which) {
    case Component::bm: return path.bm(i)[c];
    case Component::drift: return path.drift(i)[c];
    case Component::combined: return path.combined(i, c);
  }
  return 0.0;
}
}  // namespace

PointCloud image_cloud(const sim::SamplePath& path, Component which) {
  const std::size_t d = path.dim();
  std::vector<double> coords(path.size() * d);
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) coords[i * d + c] = component_value(path, which, i, c);
  }
  return PointCloud(d, std::move(coords), std::string("image of ") + to_string(which));
}

PointCloud graph_cloud(const sim::SamplePath& path, Component which) {
  const std::size_t d = path.dim();
  const std::size_t m = d + 1;
  const auto times = path.grid().times();
  std::vector<double> coords(path.size() * m);
  for (std::size_t i = 0; i < path.size(); ++i) {
    coords[i * m] = times[i];
    for (std::size_t c = 0; c < d; ++c) coords[i * m + 1 + c] = component_value(path, which, i, c);
  }
  return PointCloud(m, std::move(coords), std::string("graph of ") + to_string(which));
}

PointCloud time_cloud(const sim::TimeGrid& grid) {
  const auto t = grid.times();
  return PointCloud(1, std::vector<double>(t.begin(), t.end()), "time grid " + sim::describe(grid.descriptor()));
}

}  // namespace fracdim::metrics
