#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <memory>
#include <vector>

namespace zk {

using Index3 = std::array<int, 3>;
using Vec3 = std::array<double, 3>;

/// Periodic cubic box [-L/2, L/2)^dim sampled with n points per axis.
///
/// Storage is row-major with axis 0 slowest. Unused trailing axes (dim < 3)
/// carry index 0. The frequency lattice is k_j = (2 pi / L) m_j with the
/// signed mode m_j in [-n/2, n/2), laid out in the usual FFT order
/// (0, 1, ..., n/2 - 1, -n/2, ..., -1).
class Grid {
 public:
  Grid(int dim, int n, double length);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double length() const { return length_; }
  std::size_t size() const { return size_; }

  double spacing() const { return length_ / n_; }
  double cell_volume() const;
  /// Fundamental wavenumber 2 pi / L.
  double dk() const;
  /// Largest resolved per-axis wavenumber, (2 pi / L)(n/2 - 1).
  double max_wavenumber() const { return dk() * (n_ / 2 - 1); }

  int signed_mode(int i) const { return i < n_ / 2 ? i : i - n_; }
  /// Storage index of signed mode m (wrapped into [0, n)).
  int mode_slot(int m) const { return ((m % n_) + n_) % n_; }
  double coordinate(int i) const { return -0.5 * length_ + i * spacing(); }

  Index3 unravel(std::size_t flat) const;
  std::size_t ravel(const Index3& idx) const;

  /// Flat index of the mode -m for the mode stored at `flat`.
  std::size_t negated_mode(std::size_t flat) const;

  Vec3 wavevector(std::size_t flat) const;
  Vec3 position(std::size_t flat) const;

  bool operator==(const Grid& other) const = default;

 private:
  int dim_;
  int n_;
  double length_;
  std::size_t size_;
};

/// Precomputed symbols shared by the hot loops: |k|^2, |k|, and the
/// 2/3-rule dealiasing mask (|m_j| < n/3 on every axis).
struct Lattice {
  explicit Lattice(const Grid& grid);

  Grid grid;
  std::vector<double> k2;
  std::vector<double> kabs;
  // |k|^2 = dk^2 * M with M = sum_j m_j^2 an integer, so every radial symbol
  // is a function of the shell index M. shell_k2[M] and shell_kabs[M] hold the
  // values that k2 and kabs take on shell M.
  std::vector<std::uint32_t> shell;
  std::vector<double> shell_k2;
  std::vector<double> shell_kabs;
  std::vector<double> dealias;  // 0 or 1
  int dealias_cutoff;           // largest kept |m_j|
};

/// Process-wide cache of Lattice objects keyed by grid.
const Lattice& lattice_for(const Grid& grid);

}  // namespace zk
