#pragma once

#include <string>
#include <vector>

#include "fracdim/constructions.hpp"
#include "fracdim/experiments.hpp"

namespace fracdim::experiments {

// Every check reads the first configured method and takes its tolerance from
// report.config.tolerances. Margins are signed slack (>= 0 passes) except for
// constancy, whose margin is the largest IQR observed.

/// IQR of ls_slope across seeds <= tolerance for every object. Needs >= 8
/// seeds (Error("insufficient-seeds")).
Verdict check_constancy(const ExperimentReport& report);
/// median image(B+f) >= max(median image(B), median image(f)) - tolerance.
Verdict check_image_inequality(const ExperimentReport& report);
/// Same on graph objects.
Verdict check_graph_inequality(const ExperimentReport& report);
/// |median graph(B+f) - max(median graph(B), median graph(f))| <= tolerance.
/// Needs a continuous drift (Error("drift-not-continuous")) on the interval.
Verdict check_graph_equality_continuous(const ExperimentReport& report);
/// median image(B over A_beta) within [t - lower, t + upper] of
/// t = 2a/(a+1), a = 1/(1+beta). Needs a power_set set and d = 1
/// (Error("bad-precondition")).
Verdict check_corollary_bound(const ExperimentReport& report, double beta);

/// Slope over j_min..j_max of log2 max(2^j, max_k count(n_k, 2^-j)), with
/// count the two-regime psi graph formula wherever 2^-j is inside its regime.
/// Works in log space, so the symbolic paper schedule is accepted.
double example_formula_target(const analytic::LacunarySchedule& schedule, std::size_t K, int j_min,
                              int j_max);

struct ExampleSetup {
  analytic::LacunarySchedule schedule = analytic::LacunarySchedule::desk();
  std::size_t K = 3;
  std::vector<std::uint64_t> seeds;
  int j_min = 4;
  int j_max = 12;
  std::size_t points = (std::size_t{1} << 20) + 1;
  std::optional<Target> target;
  Tolerances tolerances;
};

ExperimentConfig example_config(const ExampleSetup& setup);

/// Runs the lacunary example and attaches verdicts example-53 (graph(f)
/// within tolerance of the target; the formula target when none is
/// configured) and example-74-directional (graph(B+f) >= graph(f) + gap).
/// The paper schedule is rejected with Error("schedule-not-simulable").
ExperimentReport run_example_experiment(const ExperimentConfig& config, const RunOptions& options = {});

/// Runs the experiment behind `claim` and attaches that claim's verdict.
/// Unknown ids raise Error("unknown-claim").
ExperimentReport run_claim(const std::string& claim, const ConfigFile& file, const RunOptions& options = {});

/// Every registered experiment once, with all seven verdicts.
std::vector<ExperimentReport> run_all_claims(const ConfigFile& file, const RunOptions& options = {});

}  // namespace fracdim::experiments
