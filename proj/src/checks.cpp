#include "fracdim/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim::experiments {

namespace {

metrics::SeriesKind primary(const ExperimentReport& r) {
  if (r.config.methods.empty()) throw Error("bad-config", "report has no methods");
  return r.config.methods.front();
}

std::optional<double> median_of(const ExperimentReport& r, const std::string& object) {
  const auto s = r.slopes(object, primary(r));
  if (s.empty()) return std::nullopt;
  return median(s);
}

double require_median(const ExperimentReport& r, const std::string& object) {
  const auto m = median_of(r, object);
  if (!m) throw Error("missing-object", object + " not in report");
  return *m;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed << v;
  return os.str();
}

Verdict inequality(const ExperimentReport& r, const std::string& kind, const std::string& claim) {
  const double tol = r.config.tolerances.inequality;
  const auto bf = median_of(r, kind + ":B+f");
  if (!bf) {
    if (r.config.drift == "zero") return {claim, true, tol, "zero drift: B+f = B"};
    throw Error("missing-object", kind + ":B+f not in report");
  }
  const double b = require_median(r, kind + ":B");
  const double f = require_median(r, kind + ":f");
  const double margin = *bf - (std::max(b, f) - tol);
  return {claim, margin >= 0.0, margin,
          "B+f " + fmt(*bf) + ", B " + fmt(b) + ", f " + fmt(f)};
}

}  // namespace

Verdict check_constancy(const ExperimentReport& report) {
  if (report.per_seed.size() < 8) {
    throw Error("insufficient-seeds", "constancy needs >= 8 seeds, got " + std::to_string(report.per_seed.size()));
  }
  const auto method = primary(report);
  double worst = 0.0;
  std::string worst_object;
  bool any = false;
  for (const auto& name : all_object_names()) {
    const auto s = report.slopes(name, method);
    if (s.empty()) continue;
    any = true;
    const double q = iqr(s);
    if (q >= worst) {
      worst = q;
      worst_object = name;
    }
  }
  if (!any) throw Error("missing-object", "report has no estimates");
  return {"constancy", worst <= report.config.tolerances.constancy_iqr, worst,
          "max IQR " + fmt(worst) + " (" + worst_object + ")"};
}

Verdict check_image_inequality(const ExperimentReport& report) {
  return inequality(report, "image", "thm13-image");
}

Verdict check_graph_inequality(const ExperimentReport& report) {
  return inequality(report, "graph", "thm15-graph");
}

Verdict check_graph_equality_continuous(const ExperimentReport& report) {
  const auto& c = report.config;
  if (!parse_drift(c.drift, c.base_dir).is_continuous()) {
    throw Error("drift-not-continuous", c.drift);
  }
  if (parse_set(c.set).kind != SetDescriptor::Kind::interval) {
    throw Error("bad-precondition", "equality check needs the full interval");
  }
  const double tol = c.tolerances.equality;
  const auto bf = median_of(report, "graph:B+f");
  if (!bf) {
    // Zero drift: B+f is B, equality holds by construction.
    return {"thm16-equality", true, tol, "zero drift: B+f = B"};
  }
  const double b = require_median(report, "graph:B");
  const double f = require_median(report, "graph:f");
  const double margin = tol - std::abs(*bf - std::max(b, f));
  return {"thm16-equality", margin >= 0.0, margin,
          "B+f " + fmt(*bf) + ", B " + fmt(b) + ", f " + fmt(f)};
}

Verdict check_corollary_bound(const ExperimentReport& report, double beta) {
  const auto& c = report.config;
  if (c.d != 1) throw Error("bad-precondition", "corollary check is wired for d = 1 only");
  if (parse_set(c.set).kind != SetDescriptor::Kind::power_set) {
    throw Error("bad-precondition", "corollary check needs a power_set time set");
  }
  const double alpha = 1.0 / (1.0 + beta);
  const double target = analytic::theoretical_image_bound(alpha, 1);
  const double m = require_median(report, "image:B");
  const double lo = target - c.tolerances.corollary_lower;
  const double hi = target + c.tolerances.corollary_upper;
  const double margin = std::min(m - lo, hi - m);
  return {"cor14-bound", margin >= 0.0, margin,
          "image(B) " + fmt(m) + ", target " + fmt(target) + ", window [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

double example_formula_target(const analytic::LacunarySchedule& schedule, std::size_t K, int j_min,
                              int j_max) {
  if (j_max - j_min < 2) throw Error("window-too-small", "need at least 3 scales");
  std::vector<std::pair<double, double>> pts;
  for (int j = j_min; j <= j_max; ++j) {
    const double x = -static_cast<double>(j);  // log2 eps
    double best = static_cast<double>(j);      // a graph needs at least one box per column
    for (std::size_t k = 1; k <= K; ++k) {
      const double L = schedule.log2_n(k);
      if (!(x > -1.5 * L && x < 0.0)) continue;
      // log2 of eps^{-1} sqrt(n) below n^{-3/4}, of n^{-1/4} eps^{-2} above.
      best = std::max(best, x < -0.75 * L ? L / 2.0 - x : -L / 4.0 - 2.0 * x);
    }
    pts.emplace_back(static_cast<double>(j), best);
  }
  double mx = 0.0, my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  return sxy / sxx;
}

ExperimentConfig example_config(const ExampleSetup& setup) {
  ExperimentConfig c;
  c.name = "example";
  c.drift = "lacunary:" + setup.schedule.describe() + ":" + std::to_string(setup.K);
  c.seeds = setup.seeds;
  c.points = setup.points;
  c.j_min = setup.j_min;
  c.j_max = setup.j_max;
  c.objects = {"graph:B", "graph:f", "graph:B+f"};
  c.target = setup.target;
  c.tolerances = setup.tolerances;
  return c;
}

ExperimentReport run_example_experiment(const ExperimentConfig& config, const RunOptions& options) {
  if (!config.drift.starts_with("lacunary:")) {
    throw Error("bad-config", "example experiment needs a lacunary drift");
  }
  auto report = run_experiment(config, options);
  const auto& tol = config.tolerances;
  double target;
  if (config.target) {
    target = config.target->value;
  } else {
    const auto spec = config.drift.substr(std::string("lacunary:").size());
    const auto last = spec.rfind(':');
    target = example_formula_target(analytic::LacunarySchedule::parse(spec.substr(0, last)),
                                    std::stoull(spec.substr(last + 1)), config.j_min, config.j_max);
  }
  const double target_tol = config.target ? config.target->tolerance : tol.example_target;
  const double f = require_median(report, "graph:f");
  const double bf = require_median(report, "graph:B+f");
  const double m53 = target_tol - std::abs(f - target);
  report.verdicts.push_back({"example-53", m53 >= 0.0, m53,
                             "graph(f) " + fmt(f) + ", target " + fmt(target)});
  const double m74 = bf - f - tol.example_gap;
  report.verdicts.push_back({"example-74-directional", m74 >= 0.0, m74,
                             "graph(B+f) " + fmt(bf) + " vs graph(f) " + fmt(f)});
  return report;
}

namespace {

ExperimentReport run_key(const std::string& key, const ConfigFile& file, const RunOptions& options) {
  const auto it = file.experiments.find(key);
  if (it == file.experiments.end()) throw Error("bad-config", "no experiment configured for " + key);
  const auto& config = it->second;
  if (key == "example") return run_example_experiment(config, options);
  auto report = run_experiment(config, options);
  if (key == "constancy") {
    report.verdicts.push_back(check_constancy(report));
  } else if (key == "thm13-image") {
    report.verdicts.push_back(check_image_inequality(report));
  } else if (key == "thm15-graph") {
    report.verdicts.push_back(check_graph_inequality(report));
  } else if (key == "thm16-equality") {
    report.verdicts.push_back(check_graph_equality_continuous(report));
  } else if (key == "cor14-bound") {
    report.verdicts.push_back(check_corollary_bound(report, parse_set(config.set).beta));
  }
  return report;
}

}  // namespace

ExperimentReport run_claim(const std::string& claim, const ConfigFile& file, const RunOptions& options) {
  const auto key = experiment_key(claim);
  auto report = run_key(key, file, options);
  std::erase_if(report.verdicts, [&](const Verdict& v) { return v.claim != claim; });
  return report;
}

std::vector<ExperimentReport> run_all_claims(const ConfigFile& file, const RunOptions& options) {
  std::vector<ExperimentReport> out;
  std::vector<std::string> done;
  for (const auto& claim : claim_ids()) {
    const auto key = experiment_key(claim);
    if (std::find(done.begin(), done.end(), key) != done.end()) continue;
    done.push_back(key);
    out.push_back(run_key(key, file, options));
  }
  return out;
}

}  // namespace fracdim::experiments
