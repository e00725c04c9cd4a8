#pragma once

#include <vector>

#include "zk/field.hpp"

namespace zk {

/// Smooth dyadic partition psi_k(xi) = chi(|xi| / 2^k) - chi(|xi| / 2^(k-1)),
/// with chi = 1 on [0, 1], 0 on [2, inf) and a quintic smoothstep between.
///
/// Shells are truncated to the grid: k_min = floor(log2(2 pi / L)) and
/// k_max = ceil(log2(sqrt(dim) * pi n / L)), so the shells sum to one on
/// every non-zero lattice frequency. Content outside that range does not
/// exist on the grid; this truncation is the discretisation error of all
/// Besov quantities computed here.
class DyadicPartition {
 public:
  explicit DyadicPartition(const Grid& grid);

  static double cutoff(double r);
  double shell_symbol(int k, double kabs) const;

  int k_min() const { return k_min_; }
  int k_max() const { return k_max_; }
  const Grid& grid() const { return grid_; }

  /// P_k applied to a field; the result is a Frequency field.
  Field project(const Field& field, int k) const;

 private:
  void check_shell(int k) const;

  Grid grid_;
  int k_min_;
  int k_max_;
};

/// Homogeneous Besov norm || 2^{sk} ||P_k v||_{L^p} ||_{l^q}. The input must
/// have zero mean; q may be kInfinity.
double besov_norm(const DyadicPartition& partition, const Field& field, double s, double p, double q);

}  // namespace zk
