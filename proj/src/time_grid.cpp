#include "fracdim/time_grid.hpp"

#include <bit>
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

std::string describe(const GridDescriptor& descriptor) {
  std::ostringstream os;
  std::visit(Overloaded{
                 [&](const UniformGrid& u) { os << "uniform{" << u.n_points << "}"; },
                 [&](const PowerSetGrid& p) {
                   os << "power_set{beta=" << p.beta << ",n_max=" << p.n_max << "}";
                 },
                 [&](const DyadicGrid& d) { os << "dyadic{" << d.level << "}"; },
                 [&](const CustomGrid&) { os << "custom"; },
             },
             descriptor);
  return os.str();
}

TimeGrid::TimeGrid(std::vector<double> times, GridDescriptor descriptor)
    : times_(std::move(times)), descriptor_(descriptor) {
  if (times_.empty()) throw Error("empty-grid");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    const double t = times_[i];
    if (!(t >= 0.0 && t <= 1.0)) {
      throw Error("bad-grid", "time outside [0,1] at index " + std::to_string(i));
    }
    if (i > 0 && !(times_[i - 1] < t)) {
      throw Error("bad-grid", "times not strictly increasing at index " + std::to_string(i));
    }
  }
}

TimeGrid TimeGrid::uniform(std::size_t n_points) {
  if (n_points == 0) throw Error("empty-grid");
  std::vector<double> t(n_points, 0.0);
  if (n_points > 1) {
    const double denom = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) t[i] = static_cast<double>(i) / denom;
    t.back() = 1.0;
  }
  return TimeGrid(std::move(t), UniformGrid{n_points});
}

TimeGrid TimeGrid::dyadic(int level) {
  if (level < 0 || level > 40) throw Error("bad-grid", "dyadic level out of range");
  const std::size_t intervals = std::size_t{1} << level;
  std::vector<double> t(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    t[i] = std::ldexp(static_cast<double>(i), -level);
  }
  return TimeGrid(std::move(t), DyadicGrid{level});
}

TimeGrid TimeGrid::custom(std::vector<double> times) {
  return TimeGrid(std::move(times), CustomGrid{});
}

std::optional<int> TimeGrid::dyadic_level() const {
  const std::size_t intervals = times_.size() - 1;
  if (intervals == 0 || !std::has_single_bit(intervals)) return std::nullopt;
  const int level = std::countr_zero(intervals);
  for (std::size_t i = 0; i <= intervals; ++i) {
    if (times_[i] != std::ldexp(static_cast<double>(i), -level)) return std::nullopt;
  }
  return level;
}

}  // namespace fracdim::sim
