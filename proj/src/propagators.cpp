#include "zk/propagators.hpp"

#include <cmath>

#include "zk/error.hpp"
#include "zk/kernels.hpp"
#include "zk/spectral.hpp"

namespace zk {

const char* to_string(Branch b) { return b == Branch::Plus ? "+" : "-"; }

Field schrodinger_group(const Field& field, double t) {
  Field out = in_space(field, Space::Frequency);
  const Lattice& lat = lattice_for(out.grid());
  kernels::parallel::rotate_shells(out.values(), lat.shell, lat.shell_k2, -t);
  return out;
}

Field wave_half_group(const Field& field, Branch sign, double t) {
  Field out = in_space(field, Space::Frequency);
  const Lattice& lat = lattice_for(out.grid());
  kernels::parallel::rotate_shells(out.values(), lat.shell, lat.shell_kabs, -sign_of(sign) * t);
  return out;
}

Field schrodinger_profile_of(const Field& u, double t) { return schrodinger_group(u, -t); }

Field schrodinger_physical_of(const Field& f, double t) { return schrodinger_group(f, t); }

Field wave_profile_of(const Field& w, Branch branch, double t) {
  return wave_half_group(w, opposite(branch), t);
}

Field wave_physical_of(const Field& g, Branch branch, double t) {
  return wave_half_group(g, branch, t);
}

Field minus_profile_from_plus(const Field& gplus_hat) {
  gplus_hat.require(Space::Frequency, "minus_profile_from_plus");
  const Grid& g = gplus_hat.grid();
  Field out(g, Space::Frequency);
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = -std::conj(gplus_hat[g.negated_mode(i)]);
  return out;
}

double schrodinger_wrap_time(const Grid& grid) {
  return schrodinger_wrap_time(grid, grid.max_wavenumber());
}

double schrodinger_wrap_time(const Grid& grid, double wavenumber) {
  if (!(wavenumber > 0.0)) throw ContractError("schrodinger_wrap_time: wavenumber must be positive");
  return grid.length() / (2.0 * 2.0 * wavenumber);
}

double wave_wrap_time(const Grid& grid) { return grid.length() / 2.0; }

double effective_wavenumber(const Field& field) {
  Field hat = in_space(field, Space::Frequency);
  const Lattice& lat = lattice_for(hat.grid());
  double mass = kernels::parallel::sum_abs_pow(hat.values(), 2.0);
  if (mass == 0.0) throw ContractError("effective_wavenumber: zero field");
  double moment = kernels::parallel::weighted_sum_sq(hat.values(), lat.k2);
  return 3.0 * std::sqrt(moment / mass / hat.grid().dim());
}

}  // namespace zk
