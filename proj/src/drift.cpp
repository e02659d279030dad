#include "fracdim/drift.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracdim/error.hpp"

namespace fracdim::sim {

namespace {
template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;
}  // namespace

DriftSpec DriftSpec::zero() { return DriftSpec(ZeroDrift{}); }

DriftSpec DriftSpec::linear(std::vector<double> mu) {
  if (mu.empty()) throw Error("bad-drift", "linear drift needs a slope");
  return DriftSpec(LinearDrift{std::move(mu)});
}

DriftSpec DriftSpec::psi(std::uint64_t n) {
  if (n == 0) throw Error("bad-drift", "psi_n needs n >= 1");
  return DriftSpec(PsiDrift{n});
}

DriftSpec DriftSpec::lacunary(std::vector<std::uint64_t> schedule, std::size_t truncation,
                              double tail_bound) {
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (schedule[k] == 0) throw Error("bad-drift", "schedule entries must be positive");
    if (k > 0 && schedule[k] <= schedule[k - 1]) {
      throw Error("bad-drift", "schedule must be strictly increasing");
    }
  }
  if (truncation > schedule.size()) {
    throw Error("bad-drift", "truncation exceeds schedule length");
  }
  if (!(tail_bound >= 0.0)) throw Error("bad-drift", "tail bound must be non-negative");
  return DriftSpec(LacunaryDrift{std::move(schedule), truncation, tail_bound});
}

DriftSpec DriftSpec::table(std::vector<double> times, std::vector<double> values,
                           std::size_t dim) {
  if (dim == 0 || times.empty()) throw Error("bad-drift", "table drift needs rows");
  if (values.size() != times.size() * dim) {
    throw Error("bad-drift", "table values do not match times x dim");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0 && times[i] <= 1.0) || (i > 0 && !(times[i - 1] < times[i]))) {
      throw Error("bad-drift", "table times must increase strictly inside [0,1]");
    }
  }
  return DriftSpec(TableDrift{std::move(times), std::move(values), dim});
}

std::optional<std::size_t> DriftSpec::dim() const {
  return std::visit(Overloaded{
                        [](const ZeroDrift&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const LinearDrift& l) -> std::optional<std::size_t> {
                          if (l.mu.size() == 1) return std::nullopt;
                          return l.mu.size();
                        },
                        [](const PsiDrift&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const LacunaryDrift&) -> std::optional<std::size_t> { return std::nullopt; },
                        [](const TableDrift& t) -> std::optional<std::size_t> { return t.dim; },
                    },
                    v_);
}

bool DriftSpec::is_zero() const {
  if (std::holds_alternative<ZeroDrift>(v_)) return true;
  if (const auto* lac = std::get_if<LacunaryDrift>(&v_)) return lac->truncation == 0;
  if (const auto* lin = std::get_if<LinearDrift>(&v_)) {
    return std::all_of(lin->mu.begin(), lin->mu.end(), [](double m) { return m == 0.0; });
  }
  return false;
}

bool DriftSpec::is_continuous() const {
  return std::visit(
      Overloaded{
          [](const ZeroDrift&) { return true; },
          [](const LinearDrift&) { return true; },
          [](const PsiDrift&) { return false; },
          [](const LacunaryDrift& l) { return l.truncation == 0; },
          [](const TableDrift& t) {
            // Continuous only if every row equals the implicit zero before times[0]
            // (or the table starts at 0) and no row differs from the next.
            const std::size_t rows = t.times.size();
            for (std::size_t i = 1; i < rows; ++i) {
              if (!std::equal(t.values.begin() + static_cast<std::ptrdiff_t>(i * t.dim),
                              t.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * t.dim),
                              t.values.begin() + static_cast<std::ptrdiff_t>((i - 1) * t.dim))) {
                return false;
              }
            }
            if (t.times.front() > 0.0) {
              return std::all_of(t.values.begin(), t.values.begin() + static_cast<std::ptrdiff_t>(t.dim),
                                 [](double v) { return v == 0.0; });
            }
            return true;
          },
      },
      v_);
}

std::string DriftSpec::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const ZeroDrift&) { os << "zero"; },
                 [&](const LinearDrift& l) {
                   os << "linear:";
                   for (std::size_t i = 0; i < l.mu.size(); ++i) os << (i ? "," : "") << l.mu[i];
                 },
                 [&](const PsiDrift& p) { os << "psi_n:" << p.n; },
                 [&](const LacunaryDrift& l) {
                   os << "lacunary{";
                   for (std::size_t k = 0; k < l.truncation; ++k) os << (k ? "," : "") << l.schedule[k];
                   os << "};tail<=" << l.tail_bound;
                 },
                 [&](const TableDrift& t) { os << "table{" << t.times.size() << "x" << t.dim << "}"; },
             },
             v_);
  return os.str();
}

double psi(std::uint64_t n, double x) {
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(nd);
  const double y = nd * x;
  const double frac = y - std::floor(y);
  double level;
  if (frac < 0.5) {
    // phi decreasing: the right limit of floor(v) is ceil(v) - 1.
    level = std::ceil(root * (1.0 - frac)) - 1.0;
  } else {
    level = std::floor(root * frac);
  }
  return level * std::pow(nd, -0.75);
}

void eval_drift(const DriftSpec& spec, double t, std::span<double> out) {
  if (!(t >= 0.0 && t <= 1.0)) throw Error("time-out-of-range", std::to_string(t));
  if (const auto d = spec.dim(); d && *d != out.size()) {
    throw Error("dim-mismatch", "drift has dimension " + std::to_string(*d));
  }
  std::visit(Overloaded{
                 [&](const ZeroDrift&) { std::fill(out.begin(), out.end(), 0.0); },
                 [&](const LinearDrift& l) {
                   for (std::size_t c = 0; c < out.size(); ++c) {
                     out[c] = l.mu[l.mu.size() == 1 ? 0 : c] * t;
                   }
                 },
                 [&](const PsiDrift& p) { std::fill(out.begin(), out.end(), psi(p.n, t)); },
                 [&](const LacunaryDrift& l) {
                   double sum = 0.0;
                   for (std::size_t k = 0; k < l.truncation; ++k) sum += psi(l.schedule[k], t);
                   std::fill(out.begin(), out.end(), sum);
                 },
                 [&](const TableDrift& tab) {
                   const auto it = std::upper_bound(tab.times.begin(), tab.times.end(), t);
                   if (it == tab.times.begin()) {
                     std::fill(out.begin(), out.end(), 0.0);
                     return;
                   }
                   const auto row = static_cast<std::size_t>(it - tab.times.begin()) - 1;
                   std::copy_n(tab.values.begin() + static_cast<std::ptrdiff_t>(row * tab.dim), tab.dim,
                               out.begin());
                 },
             },
             spec.variant());
}

std::vector<double> eval_drift(const DriftSpec& spec, double t) {
  std::vector<double> out(spec.dim().value_or(1));
  eval_drift(spec, t, out);
  return out;
}

}  // namespace fracdim::sim
