#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/point_cloud.hpp"

namespace fracdim::metrics {

enum class SeriesKind { box, packing, sausage_volume, oscillation };

const char* to_string(SeriesKind kind) noexcept;
/// Accepts "box", "packing", "sausage"/"sausage_volume", "oscillation".
SeriesKind parse_series_kind(const std::string& name);

/// One measurement at scale epsilon = 2^{-j}.
struct ScaleEntry {
  double j = 0.0;
  double epsilon = 1.0;
  double value = 1.0;
};

/// (scale, measurement) pairs of one counting method, finest scale last.
class ScaleSeries {
 public:
  ScaleSeries(SeriesKind kind, std::vector<ScaleEntry> entries, std::string meta = {},
              std::optional<std::size_t> ambient_dim = std::nullopt);

  /// Builds entries from (epsilon, value) pairs, setting j = log2(1/epsilon).
  static ScaleSeries from_pairs(SeriesKind kind, const std::vector<std::pair<double, double>>& pairs,
                                std::optional<std::size_t> ambient_dim = std::nullopt);

  SeriesKind kind() const noexcept { return kind_; }
  const std::vector<ScaleEntry>& entries() const noexcept { return entries_; }
  const std::string& meta() const noexcept { return meta_; }
  std::optional<std::size_t> ambient_dim() const noexcept { return ambient_dim_; }

 private:
  SeriesKind kind_;
  std::vector<ScaleEntry> entries_;
  std::string meta_;
  std::optional<std::size_t> ambient_dim_;
};

struct SweepOptions {
  int sausage_refine = 4;
};

/// Runs one counting method at epsilon = 2^{-j}, j = j_min..j_max.
/// Oscillation needs a 2-D graph cloud whose time coordinates are the full
/// dyadic grid of some level >= j_max.
ScaleSeries scale_sweep(const PointCloud& cloud, SeriesKind kind, int j_min, int j_max,
                        const SweepOptions& options = {});

struct ScaleWindow {
  double j_min = -1e300;
  double j_max = 1e300;
};

/// Slope summary of log2(value) against j.
struct DimensionEstimate {
  double lower = 0.0;    // min of local slopes (liminf proxy)
  double upper = 0.0;    // max of local slopes (limsup proxy)
  double ls_slope = 0.0; // least-squares slope over the window
  std::vector<double> local_slopes;
  double residual = 0.0; // RMS least-squares residual, log2 units
  double window_j_min = 0.0;
  double window_j_max = 0.0;
};

/// Local slopes between consecutive entries inside the window, their min/max
/// and the least-squares slope. Volume series are mapped through s -> m + s
/// with m the ambient dimension (argument, else the series' own).
/// Throws Error("window-too-small") for fewer than 3 entries in the window.
DimensionEstimate estimate_dimension(const ScaleSeries& series, const ScaleWindow& window = {},
                                     std::optional<std::size_t> ambient_dim = std::nullopt);

/// Header `j,epsilon,value,kind`.
void write_series_csv(std::ostream& os, const ScaleSeries& series);

nlohmann::json to_json(const DimensionEstimate& estimate);
nlohmann::json to_json(const ScaleSeries& series);

}  // namespace fracdim::metrics
