#include "fracdim/scale_series.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "fracdim/counting.hpp"
#include "fracdim/error.hpp"
#include "fracdim/path_csv.hpp"
#include "fracdim/sausage.hpp"

namespace fracdim::metrics {

const char* to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::box: return "box";
    case SeriesKind::packing: return "packing";
    case SeriesKind::sausage_volume: return "sausage_volume";
    case SeriesKind::oscillation: return "oscillation";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& name) {
  if (name == "box") return SeriesKind::box;
  if (name == "packing") return SeriesKind::packing;
  if (name == "sausage" || name == "sausage_volume") return SeriesKind::sausage_volume;
  if (name == "oscillation") return SeriesKind::oscillation;
  throw Error("unknown-method", name);
}

ScaleSeries::ScaleSeries(SeriesKind kind, std::vector<ScaleEntry> entries, std::string meta,
                         std::optional<std::size_t> ambient_dim)
    : kind_(kind), entries_(std::move(entries)), meta_(std::move(meta)), ambient_dim_(ambient_dim) {
  const bool integral = kind_ == SeriesKind::box || kind_ == SeriesKind::packing;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!(e.epsilon > 0.0)) throw Error("bad-series", "epsilon must be positive");
    if (i > 0 && !(e.epsilon < entries_[i - 1].epsilon)) {
      throw Error("bad-series", "epsilons must be strictly decreasing");
    }
    if (!(e.value > 0.0)) throw Error("bad-series", "values must be positive");
    if (integral && (e.value < 1.0 || e.value != std::floor(e.value))) {
      throw Error("bad-series", "counts must be integers >= 1");
    }
  }
}

ScaleSeries ScaleSeries::from_pairs(SeriesKind kind,
                                    const std::vector<std::pair<double, double>>& pairs,
                                    std::optional<std::size_t> ambient_dim) {
  std::vector<ScaleEntry> entries;
  entries.reserve(pairs.size());
  for (const auto& [eps, value] : pairs) entries.push_back({-std::log2(eps), eps, value});
  return ScaleSeries(kind, std::move(entries), "literal", ambient_dim);
}

ScaleSeries scale_sweep(const PointCloud& cloud, SeriesKind kind, int j_min, int j_max,
                        const SweepOptions& options) {
  if (!(j_min < j_max)) throw Error("bad-window", "j_min must be < j_max");
  if (cloud.empty()) throw Error("empty-cloud");

  std::vector<double> values;
  int level = 0;
  if (kind == SeriesKind::oscillation) {
    const std::size_t n = cloud.size();
    const std::size_t intervals = n - 1;
    if (cloud.dim() != 2 || intervals == 0 || (intervals & (intervals - 1)) != 0) {
      throw Error("kind-unsupported", "oscillation needs a 1-D graph on a full dyadic grid");
    }
    level = static_cast<int>(std::log2(static_cast<double>(intervals)) + 0.5);
    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (cloud.point(i)[0] != std::ldexp(static_cast<double>(i), -level)) {
        throw Error("kind-unsupported", "graph times are not k/2^n");
      }
      values[i] = cloud.point(i)[1];
    }
    if (j_max > level || j_min < 0) {
      throw Error("kind-unsupported", "scale finer than the sampling grid");
    }
  }
  if (kind == SeriesKind::sausage_volume && cloud.dim() > 3) {
    throw Error("dimension-unsupported", "sausage volume needs m <= 3");
  }

  std::vector<ScaleEntry> entries;
  for (int j = j_min; j <= j_max; ++j) {
    const double eps = std::ldexp(1.0, -j);
    double value = 0.0;
    switch (kind) {
      case SeriesKind::box: value = static_cast<double>(box_count(cloud, eps)); break;
      case SeriesKind::packing: value = static_cast<double>(packing_number(cloud, eps)); break;
      case SeriesKind::sausage_volume: value = sausage_volume(cloud, eps, options.sausage_refine); break;
      case SeriesKind::oscillation: value = static_cast<double>(oscillation_count(values, level, j)); break;
    }
    entries.push_back({static_cast<double>(j), eps, value});
  }
  std::string meta = cloud.source() + "; " + std::to_string(cloud.size()) + " points in R^" +
                     std::to_string(cloud.dim());
  if (kind == SeriesKind::sausage_volume) meta += "; refine=" + std::to_string(options.sausage_refine);
  return ScaleSeries(kind, std::move(entries), std::move(meta), cloud.dim());
}

DimensionEstimate estimate_dimension(const ScaleSeries& series, const ScaleWindow& window,
                                     std::optional<std::size_t> ambient_dim) {
  std::vector<double> xs, ys;
  for (const auto& e : series.entries()) {
    if (e.j >= window.j_min && e.j <= window.j_max) {
      xs.push_back(e.j);
      ys.push_back(std::log2(e.value));
    }
  }
  if (xs.size() < 3) throw Error("window-too-small", std::to_string(xs.size()) + " entries");

  double shift = 0.0;
  if (series.kind() == SeriesKind::sausage_volume) {
    const auto m = ambient_dim ? ambient_dim : series.ambient_dim();
    if (!m) throw Error("missing-ambient-dim", "volume series need the ambient dimension");
    shift = static_cast<double>(*m);
  }

  DimensionEstimate est;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    est.local_slopes.push_back(shift + (ys[i] - ys[i - 1]) / (xs[i] - xs[i - 1]));
  }
  const auto [lo, hi] = std::minmax_element(est.local_slopes.begin(), est.local_slopes.end());
  est.lower = *lo;
  est.upper = *hi;

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  const double slope = sxy / sxx;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + slope * (xs[i] - mx));
    rss += r * r;
  }
  // The least-squares slope is a positively weighted mean of the local
  // slopes; clamp away rounding so lower <= ls_slope <= upper holds exactly.
  est.ls_slope = std::clamp(shift + slope, est.lower, est.upper);
  est.residual = std::sqrt(rss / n);
  est.window_j_min = xs.front();
  est.window_j_max = xs.back();
  return est;
}

void write_series_csv(std::ostream& os, const ScaleSeries& series) {
  os << "j,epsilon,value,kind\n";
  for (const auto& e : series.entries()) {
    os << sim::format_g17(e.j) << ',' << sim::format_g17(e.epsilon) << ','
       << sim::format_g17(e.value) << ',' << to_string(series.kind()) << '\n';
  }
}

nlohmann::json to_json(const DimensionEstimate& estimate) {
  return nlohmann::json{{"lower", estimate.lower},
                        {"upper", estimate.upper},
                        {"ls_slope", estimate.ls_slope},
                        {"residual", estimate.residual},
                        {"window", {estimate.window_j_min, estimate.window_j_max}},
                        {"local_slopes", estimate.local_slopes}};
}

nlohmann::json to_json(const ScaleSeries& series) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : series.entries()) {
    entries.push_back({{"j", e.j}, {"epsilon", e.epsilon}, {"value", e.value}});
  }
  return nlohmann::json{{"kind", to_string(series.kind())}, {"meta", series.meta()}, {"entries", entries}};
}

}  // namespace fracdim::metrics
