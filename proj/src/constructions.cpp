#include "fracdim/constructions.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim::analytic {

sim::TimeGrid gen_A_beta(double beta, std::uint64_t n_max) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error("bad-parameter", "beta must be > 0");
  if (n_max < 1) throw Error("bad-parameter", "n_max must be >= 1");
  std::vector<double> times;
  times.reserve(n_max + 1);
  times.push_back(0.0);
  for (std::uint64_t n = n_max; n >= 1; --n) {
    const double t = std::pow(static_cast<double>(n), -beta);
    if (!(t > times.back())) {
      throw Error("bad-parameter", "n^-beta not representable distinctly at n=" + std::to_string(n));
    }
    times.push_back(t);
  }
  return sim::TimeGrid(std::move(times), sim::PowerSetGrid{beta, n_max});
}

std::uint64_t holder_cover_bound(double L, double gamma, double beta, double epsilon) {
  if (!(L >= 0.0) || !(gamma > 0.0 && gamma <= 1.0) || !(beta > 0.0) || !(epsilon > 0.0)) {
    throw Error("bad-parameter", "need L >= 0, gamma in (0,1], beta > 0, eps > 0");
  }
  const double gb = gamma * beta;
  const double k = std::ceil(std::pow(epsilon, -1.0 / (gb + 1.0)));
  const double tail = std::ceil(2.0 * L * std::pow(k, -gb) / epsilon);
  return static_cast<std::uint64_t>(tail + k);
}

double theoretical_image_bound(double alpha, std::size_t d) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("bad-parameter", "alpha must lie in [0,1]");
  if (d < 1) throw Error("bad-parameter", "d must be >= 1");
  return d == 1 ? 2.0 * alpha / (alpha + 1.0) : 2.0 * alpha;
}

double psi_graph_count_formula(std::uint64_t n, double epsilon) {
  if (n < 1) throw Error("bad-parameter", "n must be >= 1");
  const double nd = static_cast<double>(n);
  if (!(epsilon > std::pow(nd, -1.5) && epsilon < 1.0)) {
    throw Error("scale-out-of-regime", "need n^{-3/2} < eps < 1");
  }
  if (epsilon < std::pow(nd, -0.75)) return std::sqrt(nd) / epsilon;
  return std::pow(nd, -0.25) / (epsilon * epsilon);
}

const char* to_string(SchedulePreset preset) noexcept {
  switch (preset) {
    case SchedulePreset::paper: return "paper";
    case SchedulePreset::desk: return "desk";
    case SchedulePreset::custom: return "custom";
  }
  return "?";
}

LacunarySchedule::LacunarySchedule(SchedulePreset preset, std::vector<std::uint64_t> values)
    : preset_(preset), values_(std::move(values)) {}

LacunarySchedule LacunarySchedule::paper() { return {SchedulePreset::paper, {}}; }
LacunarySchedule LacunarySchedule::desk() { return {SchedulePreset::desk, {}}; }

LacunarySchedule LacunarySchedule::custom(std::vector<std::uint64_t> values) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0 || (k > 0 && values[k] <= values[k - 1])) {
      throw Error("bad-schedule", "schedule must be strictly increasing positive integers");
    }
  }
  return {SchedulePreset::custom, std::move(values)};
}

LacunarySchedule LacunarySchedule::parse(const std::string& text) {
  if (text == "paper") return paper();
  if (text == "desk") return desk();
  std::vector<std::uint64_t> values;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (tok.empty() || pos != tok.size()) throw Error("bad-schedule", "bad token '" + tok + "'");
    values.push_back(v);
  }
  return custom(std::move(values));
}

double LacunarySchedule::log2_n(std::size_t k) const {
  if (k < 1) throw Error("bad-schedule", "schedule index starts at 1");
  switch (preset_) {
    case SchedulePreset::paper: return std::pow(6.0, static_cast<double>(k));
    case SchedulePreset::desk: return 2.0 * static_cast<double>(k + 2);
    case SchedulePreset::custom:
      if (k > values_.size()) throw Error("bad-schedule", "index beyond custom schedule");
      return std::log2(static_cast<double>(values_[k - 1]));
  }
  return 0.0;
}

std::optional<std::size_t> LacunarySchedule::length() const {
  if (preset_ == SchedulePreset::custom) return values_.size();
  return std::nullopt;
}

std::vector<std::uint64_t> LacunarySchedule::first(std::size_t count) const {
  switch (preset_) {
    case SchedulePreset::paper:
      throw Error("schedule-not-simulable", "n_k = 2^{6^k} is analytic-only");
    case SchedulePreset::desk: {
      if (count > 29) throw Error("schedule-not-simulable", "desk schedule beyond 64-bit range");
      std::vector<std::uint64_t> out;
      for (std::size_t k = 1; k <= count; ++k) out.push_back(std::uint64_t{1} << (2 * (k + 2)));
      return out;
    }
    case SchedulePreset::custom:
      if (count > values_.size()) throw Error("bad-schedule", "truncation beyond custom schedule");
      return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
  }
  return {};
}

std::string LacunarySchedule::describe() const {
  if (preset_ != SchedulePreset::custom) return to_string(preset_);
  std::string out;
  for (std::size_t k = 0; k < values_.size(); ++k) out += (k ? "," : "") + std::to_string(values_[k]);
  return out;
}

double lacunary_tail_bound(const LacunarySchedule& schedule, std::size_t K, double cap) {
  double sum = 0.0;
  switch (schedule.preset()) {
    case SchedulePreset::desk: {
      // sum_{k > K} 4^{-(k+2)/4}, geometric with ratio 4^{-1/4}.
      const double ratio = std::pow(4.0, -0.25);
      sum = std::pow(4.0, -static_cast<double>(K + 3) / 4.0) / (1.0 - ratio);
      break;
    }
    case SchedulePreset::paper: {
      // Super-exponential decay: terms vanish below double range within a few k.
      for (std::size_t k = K + 1;; ++k) {
        const double term = std::exp2(-schedule.log2_n(k) / 4.0);
        if (term == 0.0 || term < sum * 0x1.0p-60) break;
        sum += term;
      }
      break;
    }
    case SchedulePreset::custom: {
      const std::size_t len = *schedule.length();
      for (std::size_t k = K + 1; k <= len; ++k) sum += std::exp2(-schedule.log2_n(k) / 4.0);
      break;
    }
  }
  if (!(sum <= cap)) throw Error("tail-diverges", "tail envelope exceeds cap");
  return sum;
}

LacunaryScheduleSpec make_schedule_spec(const LacunarySchedule& schedule, std::size_t truncation) {
  if (const auto len = schedule.length(); len && truncation > *len) {
    throw Error("bad-schedule", "truncation beyond custom schedule");
  }
  return {schedule, truncation, lacunary_tail_bound(schedule, truncation)};
}

sim::DriftSpec lacunary_drift(const LacunaryScheduleSpec& spec) {
  // Only the prefix is simulated; the rest is covered by tail_bound.
  auto values = spec.schedule.first(spec.truncation);
  return sim::DriftSpec::lacunary(values, values.size(), spec.tail_bound);
}

metrics::PointCloud psi_graph_exact(std::uint64_t n) {
  if (n == 0 || !std::has_single_bit(n) || (std::countr_zero(n) % 2) != 0) {
    throw Error("bad-parameter", "exact psi sampling needs n = 4^a");
  }
  const int a = std::countr_zero(n) / 2;  // sqrt(n) = 2^a
  const int level = 3 * a;                // pieces have length n^{-3/2} = 2^{-3a}
  if (level > 26) throw Error("grid-too-large", "n^{3/2} exceeds 2^26");
  const std::size_t intervals = std::size_t{1} << level;
  std::vector<double> coords(2 * (intervals + 1));
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double t = std::ldexp(static_cast<double>(i), -level);
    coords[2 * i] = t;
    coords[2 * i + 1] = sim::psi(n, t);
  }
  return metrics::PointCloud(2, std::move(coords), "graph of psi_" + std::to_string(n));
}

const char* to_string(BoundFormula::Name name) noexcept {
  switch (name) {
    case BoundFormula::Name::image_lower_bound: return "image_lower_bound";
    case BoundFormula::Name::holder_cover: return "holder_cover";
    case BoundFormula::Name::psi_graph_count: return "psi_graph_count";
  }
  return "?";
}

namespace {
double param(const BoundFormula& f, const std::string& key) {
  const auto it = f.params.find(key);
  if (it == f.params.end()) throw Error("bad-parameter", "missing parameter " + key);
  return it->second;
}

std::uint64_t positive_integer(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 0x1.0p63) {
    throw Error("bad-parameter", std::string(what) + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}
}  // namespace

double evaluate(const BoundFormula& formula) {
  switch (formula.name) {
    case BoundFormula::Name::image_lower_bound:
      return theoretical_image_bound(param(formula, "alpha"),
                                     positive_integer(param(formula, "d"), "d"));
    case BoundFormula::Name::holder_cover:
      return static_cast<double>(holder_cover_bound(param(formula, "L"), param(formula, "gamma"),
                                                    param(formula, "beta"), param(formula, "eps")));
    case BoundFormula::Name::psi_graph_count:
      return psi_graph_count_formula(positive_integer(param(formula, "n"), "n"), param(formula, "eps"));
  }
  return 0.0;
}

}  // namespace fracdim::analytic
