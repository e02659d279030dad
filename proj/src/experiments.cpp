#include "fracdim/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <optional>
#include <thread>

#include "fracdim/error.hpp"
#include "fracdim/point_cloud.hpp"
#include "fracdim/sample_path.hpp"

namespace fracdim::experiments {

std::vector<double> ExperimentReport::slopes(const std::string& object,
                                             metrics::SeriesKind method) const {
  std::vector<double> out;
  for (const auto& seed : per_seed) {
    for (const auto& e : seed.estimates) {
      if (e.object == object && e.method == method) out.push_back(e.estimate.ls_slope);
    }
  }
  return out;
}

const Aggregate* ExperimentReport::aggregate(const std::string& object,
                                             metrics::SeriesKind method) const {
  for (const auto& a : aggregates) {
    if (a.object == object && a.method == method) return &a;
  }
  return nullptr;
}

bool ExperimentReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

namespace {
double quantile7(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}
}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw Error("empty-sample", "median of nothing");
  std::sort(values.begin(), values.end());
  return quantile7(values, 0.5);
}

double iqr(std::vector<double> values) {
  if (values.empty()) throw Error("empty-sample", "IQR of nothing");
  std::sort(values.begin(), values.end());
  return quantile7(values, 0.75) - quantile7(values, 0.25);
}

std::vector<std::string> selected_objects(const ExperimentConfig& config) {
  const bool zero = config.drift == "zero";
  std::vector<std::string> out;
  for (const auto& name : all_object_names()) {
    const bool wanted = config.objects.empty() ||
                        std::find(config.objects.begin(), config.objects.end(), name) != config.objects.end();
    const bool has_f = name.find(":B") == std::string::npos || name.ends_with("B+f");
    if (wanted && !(zero && has_f)) out.push_back(name);
  }
  return out;
}

namespace {

metrics::PointCloud object_cloud(const sim::SamplePath& path, const std::string& object) {
  const auto colon = object.find(':');
  const std::string part = object.substr(colon + 1);
  const auto which = part == "B" ? metrics::Component::bm
                     : part == "f" ? metrics::Component::drift
                                   : metrics::Component::combined;
  return object.starts_with("graph") ? metrics::graph_cloud(path, which)
                                     : metrics::image_cloud(path, which);
}

bool applicable(const std::string& object, metrics::SeriesKind method, std::size_t d) {
  if (method != metrics::SeriesKind::oscillation) return true;
  return object.starts_with("graph") && d == 1;
}

SeedResult run_seed(const ExperimentConfig& config, const sim::TimeGrid& grid,
                    const sim::DriftSpec& drift, const std::vector<std::string>& objects,
                    std::uint64_t seed) {
  auto path = sim::generate_bm(grid, config.d, seed);
  if (config.drift != "zero") path = sim::apply_drift(path, drift);
  metrics::SweepOptions sweep;
  sweep.sausage_refine = config.sausage_refine;
  SeedResult result{seed, {}};
  for (const auto& object : objects) {
    const auto cloud = object_cloud(path, object);
    for (const auto method : config.methods) {
      if (!applicable(object, method, config.d)) continue;
      try {
        const auto series = metrics::scale_sweep(cloud, method, config.j_min, config.j_max, sweep);
        result.estimates.push_back({object, method, metrics::estimate_dimension(series)});
      } catch (const Error& e) {
        throw Error(e.code(), e.detail() + " [seed " + std::to_string(seed) + ", object " + object +
                                  ", method " + metrics::to_string(method) + "]");
      }
    }
  }
  return result;
}

}  // namespace

void summarize(ExperimentReport& report) {
  report.aggregates.clear();
  std::vector<std::pair<std::string, metrics::SeriesKind>> keys;
  for (const auto& seed : report.per_seed) {
    for (const auto& e : seed.estimates) {
      const std::pair<std::string, metrics::SeriesKind> key{e.object, e.method};
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
  }
  for (const auto& [object, method] : keys) {
    const auto s = report.slopes(object, method);
    report.aggregates.push_back({object, method, median(s), iqr(s), s.size()});
  }
}

ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  validate(config);
  const auto grid = make_grid(config);
  const auto drift = parse_drift(config.drift, config.base_dir);
  const auto objects = selected_objects(config);

  ExperimentReport report;
  report.config = config;
  for (const auto& object : objects) {
    for (const auto method : config.methods) {
      if (!applicable(object, method, config.d)) {
        report.skipped.push_back(object + "/" + metrics::to_string(method));
      }
    }
  }

  const std::size_t n = config.seeds.size();
  std::vector<std::optional<SeedResult>> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = run_seed(config, grid, drift, objects, config.seeds[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  // Report the failure of the earliest seed so the message is schedule-independent.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& r : results) report.per_seed.push_back(std::move(*r));
  summarize(report);
  return report;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"claim", v.claim}, {"pass", v.pass}, {"margin", v.margin}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json per_seed = nlohmann::json::array();
  for (const auto& s : report.per_seed) {
    nlohmann::json est = nlohmann::json::array();
    for (const auto& e : s.estimates) {
      auto j = metrics::to_json(e.estimate);
      j["object"] = e.object;
      j["method"] = metrics::to_string(e.method);
      est.push_back(std::move(j));
    }
    per_seed.push_back({{"seed", s.seed}, {"estimates", std::move(est)}});
  }
  nlohmann::json aggregates = nlohmann::json::array();
  for (const auto& a : report.aggregates) {
    aggregates.push_back({{"object", a.object},
                          {"method", metrics::to_string(a.method)},
                          {"median", a.median},
                          {"iqr", a.iqr},
                          {"count", a.count}});
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
  nlohmann::json out{{"config", to_json(report.config)},
                     {"per_seed", std::move(per_seed)},
                     {"aggregates", std::move(aggregates)},
                     {"verdicts", std::move(verdicts)}};
  if (!report.skipped.empty()) out["skipped"] = report.skipped;
  return out;
}

}  // namespace fracdim::experiments
