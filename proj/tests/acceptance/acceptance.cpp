// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "fracdim/checks.hpp"
#include "fracdim/constructions.hpp"
#include "fracdim/counting.hpp"
#include "fracdim/experiments.hpp"
#include "fracdim/sample_path.hpp"
#include "fracdim/scale_series.hpp"

using namespace fracdim;
using experiments::ExperimentConfig;
using metrics::SeriesKind;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what) {
  if (!pass) ++failures;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << std::endl;
}

std::string num(double v, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << std::fixed << v;
  return os.str();
}

std::vector<std::uint64_t> seeds(std::uint64_t n) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t i = 1; i <= n; ++i) s.push_back(i);
  return s;
}

double median_of(const experiments::ExperimentReport& r, const std::string& object,
                 SeriesKind kind = SeriesKind::box) {
  return experiments::median(r.slopes(object, kind));
}

const experiments::Verdict& verdict(const experiments::ExperimentReport& r) { return r.verdicts.at(0); }

std::string describe(const experiments::Verdict& v) {
  return v.claim + " margin " + num(v.margin) + " (" + v.detail + ")";
}

void brownian_graph() {
  ExperimentConfig c;
  c.name = "bm-graph";
  c.seeds = seeds(8);
  c.points = (std::size_t{1} << 18) + 1;
  c.j_min = 5;
  c.j_max = 11;
  c.objects = {"graph:B"};
  const auto start = std::chrono::steady_clock::now();
  const auto r = experiments::run_experiment(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double m = median_of(r, "graph:B");
  report(1, m >= 1.40 && m <= 1.60 && secs <= 60.0,
         "BM graph median slope " + num(m) + " in [1.40, 1.60], " + num(secs, 1) + " s <= 60 s");
}

void constancy(const experiments::ConfigFile& file) {
  const auto r = experiments::run_claim("constancy", file);
  const auto& v = verdict(r);
  report(2, v.pass && v.margin <= 0.05 && r.per_seed.size() == 16,
         "max IQR over 16 seeds " + num(v.margin) + " <= 0.05 (" + r.config.drift + ")");
}

void method_agreement() {
  const auto path = sim::generate_bm(sim::TimeGrid::uniform((std::size_t{1} << 18) + 1), 1, 1);
  const auto cloud = metrics::graph_cloud(path, metrics::Component::bm);
  const auto box = metrics::estimate_dimension(metrics::scale_sweep(cloud, SeriesKind::box, 5, 11));
  const auto vol = metrics::estimate_dimension(metrics::scale_sweep(cloud, SeriesKind::sausage_volume, 5, 11));
  const double diff = std::abs(box.ls_slope - vol.ls_slope);
  report(3, diff <= 0.05,
         "seed 1 BM graph: box " + num(box.ls_slope) + " vs sausage " + num(vol.ls_slope) + ", |diff| " + num(diff) +
             " <= 0.05");
}

void corollary(const experiments::ConfigFile& file) {
  const auto r = experiments::run_claim("cor14-bound", file);
  const double m = median_of(r, "image:B");
  const bool window = m >= 0.57 && m <= 0.82;
  // g(x) = x^0.45 on A_1 against the covering bound at every dyadic scale.
  const auto grid = analytic::gen_A_beta(1.0, std::uint64_t{1} << 20);
  std::vector<double> ys;
  for (double t : grid.times()) ys.push_back(std::pow(t, 0.45));
  const metrics::PointCloud image(1, ys);
  bool holder = true;
  int worst_j = 0;
  double worst_ratio = 0.0;
  for (int j = 1; j <= 20; ++j) {
    const double eps = std::ldexp(1.0, -j);
    const auto count = metrics::box_count(image, eps);
    const auto bound = analytic::holder_cover_bound(1.0, 0.45, 1.0, eps);
    holder = holder && count <= bound;
    const double ratio = static_cast<double>(count) / static_cast<double>(bound);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_j = j;
    }
  }
  report(4, window && holder,
         "image(B over A_1) median " + num(m) + " in [0.57, 0.82]; Holder bound holds at j = 1..20 (max count/bound " +
             num(worst_ratio, 3) + " at j = " + std::to_string(worst_j) + ")");
}

void inequalities(const experiments::ConfigFile& file) {
  const auto graph = experiments::run_claim("thm15-graph", file);
  const auto image = experiments::run_claim("thm13-image", file);
  report(5, verdict(graph).pass && verdict(image).pass,
         describe(verdict(graph)) + "; " + describe(verdict(image)));
}

void psi_counts() {
  bool pass = true;
  std::string detail;
  const double target = 5.0 / 3.0;
  for (std::uint64_t n : {std::uint64_t{1} << 8, std::uint64_t{1} << 10, std::uint64_t{1} << 12}) {
    const double eps = std::pow(static_cast<double>(n), -0.75);
    const auto count = static_cast<double>(metrics::box_count(analytic::psi_graph_exact(n), eps));
    const double ref = std::pow(static_cast<double>(n), 1.25);
    const double ratio = std::log(count) / std::log(1.0 / eps);
    const bool factor = count <= 8.0 * ref && count >= ref / 8.0;
    const bool window = ratio >= target - 0.15 && ratio <= target + 0.15;
    pass = pass && factor && window;
    detail += "n=" + std::to_string(n) + ": count " + std::to_string(static_cast<long long>(count)) + " (factor " +
              (factor ? "ok" : "FAIL") + "), log-ratio " + num(ratio) + (window ? " ok" : " FAIL") + "; ";
  }
  report(6, pass, detail + "window [1.5167, 1.8167]");
}

void example(const experiments::ConfigFile& file) {
  const auto r = experiments::run_claim("example-74-directional", file);
  const double bf = median_of(r, "graph:B+f");
  const double f = median_of(r, "graph:f");
  report(7, bf - f >= 0.03,
         "desk K=3: graph(B+f) " + num(bf) + " - graph(f) " + num(f) + " = " + num(bf - f) + " >= 0.03");
}

void suite(int id, const char* binary, const char* label) {
  const std::string cmd = std::string("\"") + binary + "\" > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  report(id, rc == 0, std::string(label) + (rc == 0 ? " passed" : " failed (rerun " + std::string(binary) + ")"));
}

}  // namespace

int main() {
  const auto file = experiments::default_config();
  brownian_graph();
  constancy(file);
  method_agreement();
  corollary(file);
  inequalities(file);
  psi_counts();
  example(file);
  suite(8, FRACDIM_UNIT_TESTS, "exact-value unit suite");
  suite(9, FRACDIM_PROPERTY_TESTS, "property suites (>= 1000 instances each)");
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
