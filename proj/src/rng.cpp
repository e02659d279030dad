#include "fracdim/rng.hpp"

#include <cmath>
#include <numbers>

namespace fracdim {

Stream::Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : key_(splitmix64(splitmix64(seed) ^ splitmix64(~stream_id))) {}

std::uint64_t Stream::bits(std::uint64_t counter) const noexcept {
  // Two rounds so that neighbouring counters decorrelate fully.
  return splitmix64(key_ ^ splitmix64(counter));
}

double Stream::uniform(std::uint64_t counter) const noexcept {
  return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
}

double Stream::normal(std::uint64_t counter) const noexcept {
  const double u1 = uniform(2 * counter);
  const double u2 = uniform(2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace fracdim
