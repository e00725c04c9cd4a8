#include "zk/besov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zk/error.hpp"
#include "zk/kernels.hpp"
#include "zk/spectral.hpp"

namespace zk {

DyadicPartition::DyadicPartition(const Grid& grid) : grid_(grid) {
  k_min_ = static_cast<int>(std::floor(std::log2(grid.dk())));
  double top = std::sqrt(static_cast<double>(grid.dim())) * grid.dk() * (grid.n() / 2);
  k_max_ = static_cast<int>(std::ceil(std::log2(top)));
}

double DyadicPartition::cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  double x = r - 1.0;
  return 1.0 - x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

double DyadicPartition::shell_symbol(int k, double kabs) const {
  // Clamped so roundoff in the difference cannot leave [0, 1].
  return std::clamp(cutoff(kabs / std::ldexp(1.0, k)) - cutoff(kabs / std::ldexp(1.0, k - 1)), 0.0, 1.0);
}

void DyadicPartition::check_shell(int k) const {
  if (k < k_min_ || k > k_max_) {
    std::ostringstream msg;
    msg << "dyadic shell " << k << " outside active range [" << k_min_ << ", " << k_max_ << "]";
    throw ContractError(msg.str());
  }
}

Field DyadicPartition::project(const Field& field, int k) const {
  check_shell(k);
  if (!(field.grid() == grid_)) throw ContractError("project: grid mismatch");
  const Lattice& lat = lattice_for(grid_);
  std::vector<double> symbol(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) symbol[i] = shell_symbol(k, lat.kabs[i]);
  return apply_symbol(field, symbol);
}

double besov_norm(const DyadicPartition& partition, const Field& field, double s, double p, double q) {
  if (!(q >= 1.0)) throw ContractError("besov_norm: sequence exponent must be >= 1");
  Field hat = in_space(field, Space::Frequency);
  double frac = zero_mode_fraction(hat);
  if (frac > 1e-12) {
    std::ostringstream msg;
    msg << "besov_norm: homogeneous norm of a field with non-zero mean (relative zero mode " << frac << ")";
    throw ContractError(msg.str());
  }
  std::vector<double> terms;
  for (int k = partition.k_min(); k <= partition.k_max(); ++k) {
    double piece = lp_norm(partition.project(hat, k), p);
    terms.push_back(std::pow(2.0, s * k) * piece);
  }
  if (std::isinf(q)) return terms.empty() ? 0.0 : *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (double t : terms) acc += std::pow(t, q);
  return std::pow(acc, 1.0 / q);
}

}  // namespace zk
