#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracdim/drift.hpp"
#include "fracdim/point_cloud.hpp"
#include "fracdim/time_grid.hpp"

namespace fracdim::analytic {

/// {0} u {n^{-beta} : 1 <= n <= n_max}, ascending, tagged power_set.
sim::TimeGrid gen_A_beta(double beta, std::uint64_t n_max);

/// Covering count ceil(2 L k^{-gamma beta} / eps) + k with
/// k = ceil(eps^{-1/(gamma beta + 1)}), for a gamma-Holder function with
/// constant L on A_beta.
std::uint64_t holder_cover_bound(double L, double gamma, double beta, double epsilon);

/// Lower bound on dim_M B(A) in terms of alpha = dim_M A:
/// 2 alpha / (alpha + 1) for d = 1 and 2 alpha for d >= 2.
double theoretical_image_bound(double alpha, std::size_t d);

/// Order-of-magnitude box count of the graph of psi_n at scale eps, implied
/// constant 1: eps^{-1} sqrt(n) below n^{-3/4}, n^{-1/4} eps^{-2} from
/// n^{-3/4} up. Valid for eps in (n^{-3/2}, 1); otherwise throws
/// Error("scale-out-of-regime").
double psi_graph_count_formula(std::uint64_t n, double epsilon);

enum class SchedulePreset { paper, desk, custom };

const char* to_string(SchedulePreset preset) noexcept;

/// Frequency schedule n_1 < n_2 < ... of the lacunary staircase.
///   paper:  n_k = 2^{6^k} (symbolic, only usable by the analytic operations)
///   desk:   n_k = 4^{k+2}
///   custom: a finite explicit list
class LacunarySchedule {
 public:
  static LacunarySchedule paper();
  static LacunarySchedule desk();
  static LacunarySchedule custom(std::vector<std::uint64_t> values);
  /// "paper", "desk" or a comma-separated list.
  static LacunarySchedule parse(const std::string& text);

  SchedulePreset preset() const noexcept { return preset_; }
  /// log2(n_k), k >= 1.
  double log2_n(std::size_t k) const;
  /// Number of entries; nullopt for the infinite presets.
  std::optional<std::size_t> length() const;
  /// n_1..n_K as integers. Throws Error("schedule-not-simulable") for the
  /// paper preset.
  std::vector<std::uint64_t> first(std::size_t count) const;
  std::string describe() const;

 private:
  LacunarySchedule(SchedulePreset preset, std::vector<std::uint64_t> values);
  SchedulePreset preset_;
  std::vector<std::uint64_t> values_;
};

/// Envelope sum_{k > K} n_k^{-1/4} (each psi_n <= n^{-1/4}). Throws
/// Error("tail-diverges") when the sum exceeds `cap`.
double lacunary_tail_bound(const LacunarySchedule& schedule, std::size_t K, double cap = 1e3);

struct LacunaryScheduleSpec {
  LacunarySchedule schedule;
  std::size_t truncation = 0;
  double tail_bound = 0.0;
};

LacunaryScheduleSpec make_schedule_spec(const LacunarySchedule& schedule, std::size_t truncation);

/// Truncated lacunary sum as a drift. The paper preset is rejected with
/// Error("schedule-not-simulable").
sim::DriftSpec lacunary_drift(const LacunaryScheduleSpec& spec);

/// Graph of psi_n sampled at every multiple of n^{-3/2}, which hits every
/// constant piece. Requires n to be a power of 4 with n^{3/2} <= 2^26.
metrics::PointCloud psi_graph_exact(std::uint64_t n);

struct BoundFormula {
  enum class Name { image_lower_bound, holder_cover, psi_graph_count };
  Name name;
  std::map<std::string, double> params;
};

const char* to_string(BoundFormula::Name name) noexcept;
/// Validates params against the formula's domain (Error("bad-parameter")).
double evaluate(const BoundFormula& formula);

}  // namespace fracdim::analytic
