#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fracdim::sim {

struct ZeroDrift {};

struct LinearDrift {
  std::vector<double> mu;
};

/// psi_n(x) = n^{-3/4} floor(sqrt(n) phi(n x)), phi(x) = max{x, 1-x} on [0,1]
/// extended with period 1, taken right-continuous at every jump.
struct PsiDrift {
  std::uint64_t n = 1;
};

/// Sum of psi_{n_k} over the first `truncation` entries of `schedule`.
/// `tail_bound` certifies sup_x of the discarded remainder.
struct LacunaryDrift {
  std::vector<std::uint64_t> schedule;
  std::size_t truncation = 0;
  double tail_bound = 0.0;
};

/// Right-continuous step function: values row i holds on [times[i], times[i+1]).
/// Before times[0] the drift is zero.
struct TableDrift {
  std::vector<double> times;
  std::vector<double> values;  // row-major, times.size() x dim
  std::size_t dim = 1;
};

/// Declarative description of a cadlag drift f : [0,1] -> R^d.
class DriftSpec {
 public:
  using Variant = std::variant<ZeroDrift, LinearDrift, PsiDrift, LacunaryDrift, TableDrift>;

  DriftSpec() = default;

  static DriftSpec zero();
  static DriftSpec linear(std::vector<double> mu);
  static DriftSpec psi(std::uint64_t n);
  static DriftSpec lacunary(std::vector<std::uint64_t> schedule, std::size_t truncation,
                            double tail_bound);
  static DriftSpec table(std::vector<double> times, std::vector<double> values,
                         std::size_t dim);

  const Variant& variant() const noexcept { return v_; }

  /// Fixed dimension of the drift. nullopt for scalar drifts (zero, psi,
  /// lacunary, linear with one slope), which act identically on every
  /// coordinate and so fit any d.
  std::optional<std::size_t> dim() const;
  bool is_zero() const;
  /// True when f has no jumps on [0,1].
  bool is_continuous() const;
  std::string describe() const;

 private:
  explicit DriftSpec(Variant v) : v_(std::move(v)) {}
  Variant v_{ZeroDrift{}};
};

/// psi_n at x under the right-limit convention.
double psi(std::uint64_t n, double x);

/// Writes f(t) into out. Throws Error("time-out-of-range") for t outside
/// [0,1] and Error("dim-mismatch") when out has the wrong length.
void eval_drift(const DriftSpec& spec, double t, std::span<double> out);
std::vector<double> eval_drift(const DriftSpec& spec, double t);

}  // namespace fracdim::sim
