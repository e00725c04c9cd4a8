#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>

#include "zk/field.hpp"

namespace zk {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

Field to_frequency(const Field& field);
Field to_physical(const Field& field);
/// Returns the field in the requested space, transforming if needed.
Field in_space(const Field& field, Space space);

using Symbol = std::function<cplx(const Vec3& k)>;

/// Multiplies frequency values by m(k). Physical inputs are transformed
/// first; the result is always a Frequency field. If m is not finite at
/// k = 0, `zero_mode` must supply the value used there.
Field apply_multiplier(const Field& field, const Symbol& m,
                       std::optional<cplx> zero_mode = std::nullopt);

/// Fast path for precomputed symbols laid out in storage order.
Field apply_symbol(const Field& field, std::span<const double> symbol);
Field apply_symbol(const Field& field, std::span<const cplx> symbol);

enum class ZeroMode {
  Strict,     // negative powers reject a non-zero mean
  SetToZero,  // discard the mean silently
};

/// Lambda^s = |grad|^s. The zero mode of the output is 0 for every s != 0.
Field lambda_pow(const Field& field, double s, ZeroMode rule = ZeroMode::Strict);

/// Relative size of the zero mode, |v^_0| / ||v^||_2.
double zero_mode_fraction(const Field& field);

/// Multiplies by x_axis^power, or |x|^power when `axis` is empty, using the
/// box-centred coordinates of Grid::coordinate.
Field multiply_by_weight(const Field& field, int power, std::optional<int> axis = std::nullopt);

/// (sum |v|^p h^dim)^(1/p), or max |v| for p = infinity. Frequency inputs are
/// transformed to physical space first.
double lp_norm(const Field& field, double p);

/// L2 norm evaluated from frequency values via Parseval.
double l2_norm_spectral(const Field& field);

/// ||<k>^s v^|| with the same normalisation as l2_norm_spectral.
double sobolev_norm(const Field& field, double s);

/// L2 inner product <a, b> = sum conj(a) b h^dim (physical or frequency).
cplx inner_product(const Field& a, const Field& b);

/// Zeroes every mode outside the 2/3-rule band.
Field dealias(const Field& field);

}  // namespace zk
