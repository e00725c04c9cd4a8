#include "zk/grid.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <numbers>
#include <string>

#include "zk/error.hpp"

namespace zk {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Grid::Grid(int dim, int n, double length) : dim_(dim), n_(n), length_(length) {
  if (dim < 1 || dim > 3)
    throw ContractError("grid dimension must be 1, 2 or 3 (got " + std::to_string(dim) + ")");
  if (n < 8 || !is_power_of_two(n))
    throw ContractError("grid points per axis must be a power of two >= 8 (got " +
                        std::to_string(n) + ")");
  if (!(length > 0.0) || !std::isfinite(length))
    throw ContractError("grid length must be positive and finite");
  size_ = 1;
  for (int d = 0; d < dim; ++d) size_ *= static_cast<std::size_t>(n);
}

double Grid::cell_volume() const { return std::pow(spacing(), dim_); }

double Grid::dk() const { return 2.0 * std::numbers::pi / length_; }

Index3 Grid::unravel(std::size_t flat) const {
  Index3 idx{0, 0, 0};
  for (int d = dim_ - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return idx;
}

std::size_t Grid::ravel(const Index3& idx) const {
  std::size_t flat = 0;
  for (int d = 0; d < dim_; ++d) flat = flat * n_ + static_cast<std::size_t>(idx[d]);
  return flat;
}

std::size_t Grid::negated_mode(std::size_t flat) const {
  Index3 idx = unravel(flat);
  for (int d = 0; d < dim_; ++d) idx[d] = (n_ - idx[d]) % n_;
  return ravel(idx);
}

Vec3 Grid::wavevector(std::size_t flat) const {
  Index3 idx = unravel(flat);
  Vec3 k{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d) k[d] = dk() * signed_mode(idx[d]);
  return k;
}

Vec3 Grid::position(std::size_t flat) const {
  Index3 idx = unravel(flat);
  Vec3 x{0.0, 0.0, 0.0};
  for (int d = 0; d < dim_; ++d) x[d] = coordinate(idx[d]);
  return x;
}

Lattice::Lattice(const Grid& g)
    : grid(g), k2(g.size()), kabs(g.size()), shell(g.size()), dealias(g.size()),
      dealias_cutoff((g.n() - 1) / 3) {
  const std::size_t shells = static_cast<std::size_t>(g.dim()) * (g.n() / 2) * (g.n() / 2) + 1;
  shell_k2.resize(shells);
  shell_kabs.resize(shells);
  const double dk2 = g.dk() * g.dk();
  for (std::size_t m = 0; m < shells; ++m) {
    shell_k2[m] = dk2 * static_cast<double>(m);
    shell_kabs[m] = std::sqrt(shell_k2[m]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    Index3 idx = g.unravel(i);
    std::uint32_t msq = 0;
    bool kept = true;
    for (int d = 0; d < g.dim(); ++d) {
      int m = g.signed_mode(idx[d]);
      msq += static_cast<std::uint32_t>(m * m);
      kept = kept && std::abs(m) <= dealias_cutoff;
    }
    shell[i] = msq;
    k2[i] = shell_k2[msq];
    kabs[i] = shell_kabs[msq];
    dealias[i] = kept ? 1.0 : 0.0;
  }
}

const Lattice& lattice_for(const Grid& grid) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, double>, std::unique_ptr<Lattice>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(grid.dim(), grid.n(), grid.length());
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Lattice>(grid)).first;
  return *it->second;
}

}  // namespace zk
