#include "fracdim/sample_path.hpp"

#include <bit>
#include <cmath>

#include "fracdim/error.hpp"
#include "fracdim/rng.hpp"

namespace fracdim::sim {

std::string describe(const GenerationMethod& method) {
  if (const auto* levy = std::get_if<LevyMethod>(&method)) {
    return "levy{" + std::to_string(levy->depth) + "}";
  }
  return "increments";
}

SamplePath::SamplePath(TimeGrid grid, std::size_t dim, std::vector<double> bm_values,
                       std::vector<double> drift_values, std::uint64_t seed,
                       GenerationMethod method, std::string drift_description)
    : grid_(std::move(grid)),
      dim_(dim),
      bm_(std::move(bm_values)),
      drift_(std::move(drift_values)),
      seed_(seed),
      method_(method),
      drift_description_(std::move(drift_description)) {
  if (dim_ == 0) throw Error("bad-dimension", "d must be >= 1");
  if (bm_.size() != grid_.size() * dim_ || drift_.size() != grid_.size() * dim_) {
    throw Error("bad-path", "value arrays do not match grid length");
  }
}

std::vector<double> SamplePath::combined_values() const {
  std::vector<double> out(bm_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bm_[i] + drift_[i];
  return out;
}

SamplePath generate_bm(const TimeGrid& grid, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw Error("bad-dimension", "d must be >= 1");
  const auto times = grid.times();
  const std::size_t n = times.size();
  std::vector<double> values(n * d);
  for (std::size_t c = 0; c < d; ++c) {
    const Stream stream(seed, c);
    double b = times[0] > 0.0 ? std::sqrt(times[0]) * stream.normal(0) : 0.0;
    values[c] = b;
    for (std::size_t i = 1; i < n; ++i) {
      b += std::sqrt(times[i] - times[i - 1]) * stream.normal(i);
      values[i * d + c] = b;
    }
  }
  return SamplePath(grid, d, std::move(values), std::vector<double>(n * d, 0.0), seed,
                    IncrementsMethod{});
}

SamplePath levy_construct(int depth, std::size_t d, std::uint64_t seed, std::size_t max_values) {
  if (depth < 0) throw Error("bad-depth", "depth must be >= 0");
  if (d == 0) throw Error("bad-dimension", "d must be >= 1");
  if (depth >= 62 || ((std::size_t{1} << depth) + 1) > max_values / d) {
    throw Error("grid-too-large", "levy depth " + std::to_string(depth));
  }
  const std::size_t intervals = std::size_t{1} << depth;
  std::vector<double> values((intervals + 1) * d, 0.0);
  for (std::size_t c = 0; c < d; ++c) {
    // Node ids: 0 for t=1, then 2^{k-1} + i for the i-th midpoint of level k.
    const Stream stream(seed, c);
    values[intervals * d + c] = stream.normal(0);
    for (int k = 1; k <= depth; ++k) {
      const std::size_t stride = intervals >> (k - 1);  // spacing of the coarser level
      const std::size_t half = stride / 2;
      const double sd = std::sqrt(std::ldexp(1.0, -(k + 1)));
      const std::size_t base = std::size_t{1} << (k - 1);
      for (std::size_t i = 0; i < base; ++i) {
        const std::size_t left = i * stride;
        const std::size_t mid = left + half;
        const double avg = 0.5 * (values[left * d + c] + values[(left + stride) * d + c]);
        values[mid * d + c] = avg + sd * stream.normal(base + i);
      }
    }
  }
  return SamplePath(TimeGrid::dyadic(depth), d, std::move(values),
                    std::vector<double>((intervals + 1) * d, 0.0), seed, LevyMethod{depth});
}

SamplePath apply_drift(const SamplePath& path, const DriftSpec& spec) {
  const std::size_t d = path.dim();
  if (const auto sd = spec.dim(); sd && *sd != d) {
    throw Error("dim-mismatch",
                "drift dimension " + std::to_string(*sd) + " vs path dimension " + std::to_string(d));
  }
  const auto times = path.grid().times();
  std::vector<double> drift(times.size() * d);
  for (std::size_t i = 0; i < times.size(); ++i) {
    eval_drift(spec, times[i], std::span<double>(drift).subspan(i * d, d));
  }
  return SamplePath(path.grid(), d, {path.bm_values().begin(), path.bm_values().end()},
                    std::move(drift), path.seed(), path.method(), spec.describe());
}

}  // namespace fracdim::sim
