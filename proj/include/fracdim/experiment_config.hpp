#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/drift.hpp"
#include "fracdim/scale_series.hpp"
#include "fracdim/time_grid.hpp"

namespace fracdim::experiments {

/// Acceptance windows for the registered checks. All finite-scale windows
/// live here (and in the config file), never inside the checks.
struct Tolerances {
  double constancy_iqr = 0.05;
  double inequality = 0.10;
  double equality = 0.10;
  double corollary_lower = 0.10;
  double corollary_upper = 0.15;
  double example_target = 0.15;
  double example_gap = 0.03;
};

/// Least-squares box-count slope of the graph of the desk lacunary sum with
/// K = 3 (psi_64 + psi_256 + psi_1024) over j = 4..12, counted exactly.
inline constexpr double kDeskExampleTarget = 1.0790571321346507;

struct Target {
  double value = 0.0;
  double tolerance = 0.0;
};

struct ExperimentConfig {
  std::string name;
  std::string drift = "zero";   // zero | linear:<mu[,mu..]> | psi_n:<n> | lacunary:<preset>:<K> | table:<file>
  std::string set = "interval"; // interval | power_set:<beta>
  std::size_t d = 1;
  std::vector<std::uint64_t> seeds;
  std::size_t points = 0;       // grid rows on the interval; n_max for power_set
  int j_min = 0;
  int j_max = 0;
  std::vector<metrics::SeriesKind> methods{metrics::SeriesKind::box};
  std::vector<std::string> objects;  // e.g. "graph:B+f"; empty means every applicable object
  std::optional<Target> target;
  Tolerances tolerances;
  int sausage_refine = 4;
  /// Directory that relative table:<file> drifts resolve against.
  std::filesystem::path base_dir;
};

struct SetDescriptor {
  enum class Kind { interval, power_set };
  Kind kind = Kind::interval;
  double beta = 0.0;
};

/// Throws Error("bad-drift-spec") naming the offending token.
sim::DriftSpec parse_drift(const std::string& text, const std::filesystem::path& base_dir = {});
/// Throws Error("bad-set") for anything but `interval` or `power_set:<beta>`.
SetDescriptor parse_set(const std::string& text);

/// Object names: image:B, image:f, image:B+f, graph:B, graph:f, graph:B+f.
const std::vector<std::string>& all_object_names();

/// Throws Error("bad-config") on violated invariants: seeds non-empty,
/// points >= 2^{j_max+2}, j_min <= j_max, known objects and methods.
void validate(const ExperimentConfig& config);
sim::TimeGrid make_grid(const ExperimentConfig& config);

nlohmann::json to_json(const Tolerances& tolerances);
nlohmann::json to_json(const ExperimentConfig& config);
/// Missing keys keep the values already in `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

/// Registered claim ids in canonical order.
const std::vector<std::string>& claim_ids();
/// Config key of the experiment that produces `claim` (the two example
/// claims share one run).
std::string experiment_key(const std::string& claim);

/// Whole config file: shared tolerances and output directory plus one
/// experiment per key.
struct ConfigFile {
  std::string output_dir = ".";
  Tolerances tolerances;
  std::map<std::string, ExperimentConfig> experiments;
};

ConfigFile default_config();
nlohmann::json to_json(const ConfigFile& file);
/// Overlays `j` on the defaults; tolerances given at top level reach every
/// experiment unless the experiment overrides them.
ConfigFile config_file_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ConfigFile load_config_file(const std::filesystem::path& path);

}  // namespace fracdim::experiments
