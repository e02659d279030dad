#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/experiment_config.hpp"
#include "fracdim/scale_series.hpp"

namespace fracdim::experiments {

struct ObjectEstimate {
  std::string object;  // e.g. "graph:B+f"
  metrics::SeriesKind method;
  metrics::DimensionEstimate estimate;
};

struct SeedResult {
  std::uint64_t seed = 0;
  std::vector<ObjectEstimate> estimates;
};

struct Aggregate {
  std::string object;
  metrics::SeriesKind method;
  double median = 0.0;
  double iqr = 0.0;
  std::size_t count = 0;
};

struct Verdict {
  std::string claim;
  bool pass = false;
  double margin = 0.0;
  std::string detail;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<SeedResult> per_seed;
  std::vector<Aggregate> aggregates;
  std::vector<Verdict> verdicts;
  /// (object, method) pairs that do not apply, e.g. oscillation on images.
  std::vector<std::string> skipped;

  /// ls_slope of `object` under `method` for every seed that has it.
  std::vector<double> slopes(const std::string& object, metrics::SeriesKind method) const;
  /// nullptr when the pair was not computed.
  const Aggregate* aggregate(const std::string& object, metrics::SeriesKind method) const;
  bool all_pass() const;
};

double median(std::vector<double> values);
/// Interquartile range with linearly interpolated quantiles (type 7).
double iqr(std::vector<double> values);

/// Objects run_experiment computes for `config`, in canonical order. The zero
/// drift has no f objects.
std::vector<std::string> selected_objects(const ExperimentConfig& config);

struct RunOptions {
  unsigned threads = 0;  // 0: one per hardware thread
};

/// Deterministic in the config: seeds are processed independently and the
/// report does not depend on thread count or scheduling. Errors carry the
/// failing seed, object and method in their detail.
ExperimentReport run_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Recomputes report.aggregates from report.per_seed.
void summarize(ExperimentReport& report);

nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const ExperimentReport& report);

}  // namespace fracdim::experiments
