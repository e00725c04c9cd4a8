#pragma once

#include <vector>

#include "zk/field.hpp"
#include "zk/propagators.hpp"

namespace zk {

/// Profiles sampled at s_j = j * ds, j = 0, 1, ...
struct ProfileHistory {
  double ds = 0.0;
  std::vector<Field> fhat;
  std::vector<Field> gplus_hat;
};

/// Direct evaluation of the wave Duhamel integral
///     G(xi, t) = int_0^t |xi|^gamma (1/N) sum_eta e^{i s Psi} f^(xi - eta, s) conj(f^(-eta, s)) ds
/// for the half-wave `branch`, by explicit summation over the dealiased
/// eta-lattice (no transforms) and composite Simpson in s. Meant for tiny
/// grids; cost is O(modes^2 * nodes).
Field duhamel_oracle_G(const ProfileHistory& history, double t, Branch branch, double gamma);

/// Same for the Schrodinger Duhamel integral
///     F(xi, t) = int_0^t (1/N) sum_eta e^{i s Phi} f^(xi - eta, s) g^(eta, s) ds,
/// with g^- rebuilt from g^+.
Field duhamel_oracle_F(const ProfileHistory& history, double t, Branch branch);

}  // namespace zk
