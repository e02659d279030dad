#pragma once

#include <cstdint>

namespace fracdim {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based random stream keyed by (seed, stream_id).
///
/// Every draw is a pure function of (seed, stream_id, counter): there is no
/// mutable state, so draws can be addressed in any order and from any thread.
/// Gaussian draw `c` consumes uniform counters 2c and 2c+1 (Box-Muller).
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  /// Uniform on (0, 1].
  double uniform(std::uint64_t counter) const noexcept;
  /// Standard normal.
  double normal(std::uint64_t counter) const noexcept;

 private:
  std::uint64_t key_;
};

}  // namespace fracdim
