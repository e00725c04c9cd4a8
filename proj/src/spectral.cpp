#include "zk/spectral.hpp"

#include <cmath>
#include <sstream>

#include "zk/error.hpp"
#include "zk/fft.hpp"
#include "zk/kernels.hpp"

namespace zk {

namespace kp = kernels::parallel;

Field to_frequency(const Field& field) {
  field.require(Space::Physical, "to_frequency");
  Field out(field.grid(), Space::Frequency);
  fft::forward(field.grid(), field.values(), out.values());
  return out;
}

Field to_physical(const Field& field) {
  field.require(Space::Frequency, "to_physical");
  Field out(field.grid(), Space::Physical);
  fft::inverse(field.grid(), field.values(), out.values());
  return out;
}

Field in_space(const Field& field, Space space) {
  if (field.space() == space) return field;
  return space == Space::Frequency ? to_frequency(field) : to_physical(field);
}

Field apply_multiplier(const Field& field, const Symbol& m, std::optional<cplx> zero_mode) {
  Field out = in_space(field, Space::Frequency);
  const Grid& g = out.grid();
  cplx m0 = m(Vec3{0.0, 0.0, 0.0});
  if (!std::isfinite(m0.real()) || !std::isfinite(m0.imag())) {
    if (!zero_mode)
      throw ContractError("apply_multiplier: symbol is singular at k = 0 and no zero-mode value was given");
    m0 = *zero_mode;
  } else if (zero_mode) {
    m0 = *zero_mode;
  }
  out[0] *= m0;
  for (std::size_t i = 1; i < g.size(); ++i) out[i] *= m(g.wavevector(i));
  return out;
}

Field apply_symbol(const Field& field, std::span<const double> symbol) {
  Field out = in_space(field, Space::Frequency);
  if (symbol.size() != out.size()) throw ContractError("apply_symbol: symbol size mismatch");
  kp::scale(out.values(), symbol);
  return out;
}

Field apply_symbol(const Field& field, std::span<const cplx> symbol) {
  Field out = in_space(field, Space::Frequency);
  if (symbol.size() != out.size()) throw ContractError("apply_symbol: symbol size mismatch");
  kp::scale(out.values(), symbol);
  return out;
}

double zero_mode_fraction(const Field& field) {
  Field hat = in_space(field, Space::Frequency);
  double total = std::sqrt(kp::sum_abs_pow(hat.values(), 2.0));
  if (total == 0.0) return 0.0;
  return std::abs(hat[0]) / total;
}

Field lambda_pow(const Field& field, double s, ZeroMode rule) {
  Field out = in_space(field, Space::Frequency);
  if (s == 0.0) return out;
  if (s < 0.0 && rule == ZeroMode::Strict) {
    double frac = zero_mode_fraction(out);
    if (frac > 1e-12) {
      std::ostringstream msg;
      msg << "lambda_pow(" << s << "): input has a non-zero mean (|v^_0| = " << std::abs(out[0])
          << ", relative " << frac << ")";
      throw ContractError(msg.str());
    }
  }
  const Grid& g = out.grid();
  const Lattice& lat = lattice_for(g);
  std::vector<double> symbol(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    symbol[i] = lat.kabs[i] > 0.0 ? std::pow(lat.kabs[i], s) : 0.0;
  kp::scale(out.values(), symbol);
  return out;
}

Field multiply_by_weight(const Field& field, int power, std::optional<int> axis) {
  field.require(Space::Physical, "multiply_by_weight");
  if (power != 1 && power != 2) throw ContractError("multiply_by_weight: power must be 1 or 2");
  const Grid& g = field.grid();
  if (axis && (*axis < 0 || *axis >= g.dim()))
    throw ContractError("multiply_by_weight: axis out of range");
  Field out = field;
  const auto n = static_cast<long>(g.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    Vec3 x = g.position(static_cast<std::size_t>(i));
    double w;
    if (axis) {
      w = x[*axis];
      if (power == 2) w *= w;
    } else {
      double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      w = power == 2 ? r2 : std::sqrt(r2);
    }
    out[i] *= w;
  }
  return out;
}

double lp_norm(const Field& field, double p) {
  if (!(p >= 1.0)) {
    std::ostringstream msg;
    msg << "lp_norm: exponent must be >= 1 or infinity (got " << p << ")";
    throw ContractError(msg.str());
  }
  Field phys = in_space(field, Space::Physical);
  if (std::isinf(p)) return kp::max_abs(phys.values());
  double s = kp::sum_abs_pow(phys.values(), p) * field.grid().cell_volume();
  return std::pow(s, 1.0 / p);
}

double l2_norm_spectral(const Field& field) {
  Field hat = in_space(field, Space::Frequency);
  const Grid& g = hat.grid();
  double n = static_cast<double>(g.size());
  return std::sqrt(kp::sum_abs_pow(hat.values(), 2.0) * g.cell_volume() / n);
}

double sobolev_norm(const Field& field, double s) {
  Field hat = in_space(field, Space::Frequency);
  const Grid& g = hat.grid();
  const Lattice& lat = lattice_for(g);
  std::vector<double> w(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) w[i] = std::pow(1.0 + lat.k2[i], s);
  double n = static_cast<double>(g.size());
  return std::sqrt(kp::weighted_sum_sq(hat.values(), w) * g.cell_volume() / n);
}

cplx inner_product(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid()) || a.space() != b.space())
    throw ContractError("inner_product: fields must share grid and space");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  double w = a.grid().cell_volume();
  if (a.space() == Space::Frequency) w /= static_cast<double>(a.size());
  return s * w;
}

Field dealias(const Field& field) {
  const Lattice& lat = lattice_for(field.grid());
  return apply_symbol(field, lat.dealias);
}

}  // namespace zk
