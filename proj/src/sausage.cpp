#include "fracdim/sausage.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "cell_grid.hpp"

namespace fracdim::metrics {

namespace {

// Cells are tracked in blocks of kBlock^m cells, one 64-bit word per block.
constexpr std::int64_t block_side(std::size_t m) { return m == 1 ? 64 : (m == 2 ? 8 : 4); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

double sausage_volume_on_grid(const PointCloud& cloud, double r, double cell_side) {
  detail::require_counting_input(cloud, r);
  if (!(cell_side > 0.0) || !std::isfinite(cell_side)) {
    throw Error("bad-scale", "cell side must be positive");
  }
  const std::size_t m = cloud.dim();
  if (m > 3) throw Error("dimension-unsupported", "sausage volume needs m <= 3");

  const std::int64_t bs = block_side(m);
  const double r_sq = r * r;
  std::unordered_map<detail::CellKey, std::uint64_t, detail::CellKeyHash> blocks;
  blocks.reserve(cloud.size());

  std::int64_t kmin[3] = {0, 0, 0}, kmax[3] = {0, 0, 0};
  std::int64_t bmin[3] = {0, 0, 0}, bmax[3] = {0, 0, 0};
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto p = cloud.point(i);
    // Cell k has centre (k + 1/2) h; it can qualify only if that centre lies
    // in [p - r, p + r] along every axis.
    for (std::size_t a = 0; a < m; ++a) {
      kmin[a] = -detail::checked_floor(-((p[a] - r) / cell_side - 0.5));
      kmax[a] = detail::checked_floor((p[a] + r) / cell_side - 0.5);
      bmin[a] = floor_div(kmin[a], bs);
      bmax[a] = floor_div(kmax[a], bs);
    }
    for (std::int64_t b0 = bmin[0]; b0 <= bmax[0]; ++b0) {
      for (std::int64_t b1 = (m > 1 ? bmin[1] : 0); b1 <= (m > 1 ? bmax[1] : 0); ++b1) {
        for (std::int64_t b2 = (m > 2 ? bmin[2] : 0); b2 <= (m > 2 ? bmax[2] : 0); ++b2) {
          const std::int64_t bidx[3] = {b0, b1, b2};
          std::int64_t lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
          for (std::size_t a = 0; a < m; ++a) {
            lo[a] = std::max(kmin[a], bidx[a] * bs);
            hi[a] = std::min(kmax[a], bidx[a] * bs + bs - 1);
          }
          std::uint64_t bits = 0;
          for (std::int64_t k0 = lo[0]; k0 <= hi[0]; ++k0) {
            const double d0 = (static_cast<double>(k0) + 0.5) * cell_side - p[0];
            for (std::int64_t k1 = lo[1]; k1 <= hi[1]; ++k1) {
              const double d1 = m > 1 ? (static_cast<double>(k1) + 0.5) * cell_side - p[1] : 0.0;
              for (std::int64_t k2 = lo[2]; k2 <= hi[2]; ++k2) {
                const double d2 = m > 2 ? (static_cast<double>(k2) + 0.5) * cell_side - p[2] : 0.0;
                if (d0 * d0 + d1 * d1 + d2 * d2 <= r_sq) {
                  std::int64_t bit = k0 - bidx[0] * bs;
                  if (m > 1) bit = bit * bs + (k1 - bidx[1] * bs);
                  if (m > 2) bit = bit * bs + (k2 - bidx[2] * bs);
                  bits |= std::uint64_t{1} << bit;
                }
              }
            }
          }
          if (bits != 0) {
            detail::CellKey key{};
            for (std::size_t a = 0; a < m; ++a) key[a] = bidx[a];
            blocks[key] |= bits;
          }
        }
      }
    }
  }
  std::uint64_t count = 0;
  for (const auto& [key, bits] : blocks) count += static_cast<std::uint64_t>(std::popcount(bits));
  return static_cast<double>(count) * std::pow(cell_side, static_cast<double>(m));
}

double sausage_volume(const PointCloud& cloud, double r, int refine) {
  if (refine < 2) throw Error("bad-refine", "refine must be >= 2");
  return sausage_volume_on_grid(cloud, r, r / refine);
}

}  // namespace fracdim::metrics
