#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "zk/error.hpp"
#include "zk/fft.hpp"
#include "zk/propagators.hpp"
#include "zk/spectral.hpp"

namespace zk {
namespace {

using namespace zk::testing;

TEST(SchrodingerGroup, IdentityAtTimeZero) {
  Grid g(3, 16, 8.0);
  Field v = random_field(g, 1);
  EXPECT_LT(rel_l2(schrodinger_group(v, 0.0), v), 1e-15);
}

TEST(SchrodingerGroup, Unitary) {
  Grid g(3, 16, 8.0);
  Field v = random_field(g, 2);
  for (double t : {0.3, 5.0, -12.0}) {
    Field u = schrodinger_group(v, t);
    EXPECT_NEAR(l2_norm_spectral(u), l2_norm_spectral(v), 1e-13 * l2_norm_spectral(v));
    for (double s : {-1.0, 1.0, 3.0}) {
      Field a = lambda_pow(u, s, ZeroMode::SetToZero);
      Field b = lambda_pow(v, s, ZeroMode::SetToZero);
      EXPECT_NEAR(l2_norm_spectral(a), l2_norm_spectral(b), 1e-13 * l2_norm_spectral(b));
    }
  }
}

// Free evolution i u_t + Laplacian u = 0 of exp(-|x|^2 / (2 sigma^2)) is
// (1 + 2it/sigma^2)^{-d/2} exp(-|x|^2 / (2 sigma^2 (1 + 2it/sigma^2))),
// so the modulus has width sigma sqrt(1 + (2t/sigma^2)^2).
TEST(SchrodingerGroup, GaussianClosedForm) {
  const double sigma = 2.0;
  for (int dim : {2, 3}) {
    Grid g(dim, dim == 2 ? 128 : 64, dim == 2 ? 64.0 : 48.0);
    Field u0 = gaussian(g, sigma);
    for (double t : {0.5, 2.0, 4.0}) {
      Field u = to_physical(schrodinger_group(u0, t));
      const cplx z = 1.0 + cplx(0.0, 2.0 * t / (sigma * sigma));
      Field exact = Field::from_function(g, [&](const Vec3& x) {
        double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        return std::pow(z, -0.5 * dim) * std::exp(-r2 / (2.0 * sigma * sigma * z));
      });
      EXPECT_LT(max_diff(u, exact), 1e-6) << "dim " << dim << " t " << t;
      double width = sigma * std::sqrt(1.0 + std::pow(2.0 * t / (sigma * sigma), 2));
      EXPECT_NEAR(max_abs(u), std::pow(sigma / width, 0.5 * dim), 1e-6);
    }
  }
}

TEST(SchrodingerGroup, GroupLawAndInverse) {
  Grid g(3, 16, 8.0);
  Field v = random_field(g, 3);
  EXPECT_LT(rel_l2(schrodinger_group(schrodinger_group(v, 0.7), 1.9), schrodinger_group(v, 2.6)), 1e-12);
  EXPECT_LT(rel_l2(schrodinger_group(schrodinger_group(v, 3.1), -3.1), to_frequency(v)), 1e-12);
}

TEST(WaveHalfGroup, IdentityAndUnitarity) {
  Grid g(3, 16, 8.0);
  Field v = random_field(g, 4);
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    EXPECT_LT(rel_l2(wave_half_group(v, b, 0.0), v), 1e-15);
    Field w = wave_half_group(v, b, 4.2);
    EXPECT_NEAR(l2_norm_spectral(w), l2_norm_spectral(v), 1e-13 * l2_norm_spectral(v));
    EXPECT_LT(rel_l2(wave_half_group(wave_half_group(v, b, 1.5), b, 2.0), wave_half_group(v, b, 3.5)), 1e-12);
    EXPECT_LT(rel_l2(wave_half_group(wave_half_group(v, b, 1.5), opposite(b), 1.5), to_frequency(v)), 1e-12);
  }
}

// n(t) = (w+(t) - w-(t)) / 2 with w+-(t) = e^{-+it Lambda}(+-n0) against a
// leapfrog integration of n_tt = Laplacian n (spectral Laplacian, second-order in time).
TEST(WaveHalfGroup, CosineEvolutionMatchesFiniteDifferenceOracle) {
  Grid g(1, 256, 64.0);
  const double sigma = 2.0;
  Field n0 = remove_mean(gaussian(g, sigma));
  const double t_end = 5.0, dt = 1e-3;
  const int steps = static_cast<int>(std::lround(t_end / dt));

  auto laplacian = [&](const Field& v) {
    return to_physical(apply_multiplier(v, [](const Vec3& k) { return cplx(-k[0] * k[0], 0.0); }));
  };
  Field prev = n0;
  Field cur = n0 + (0.5 * dt * dt) * laplacian(n0);
  for (int s = 1; s < steps; ++s) {
    Field next = (2.0 * cur - prev) + (dt * dt) * laplacian(cur);
    prev = std::move(cur);
    cur = std::move(next);
  }
  Field wp = wave_half_group(n0, Branch::Plus, t_end);
  Field minus_n0 = -1.0 * n0;
  Field wm = wave_half_group(minus_n0, Branch::Minus, t_end);
  Field n = to_physical(0.5 * (wp - wm));
  EXPECT_LT(max_diff(n, cur), 1e-4);
}

TEST(Profiles, TimeZeroAndRoundTrip) {
  Grid g(3, 16, 8.0);
  Field u = to_frequency(random_field(g, 5));
  EXPECT_LT(rel_l2(schrodinger_profile_of(u, 0.0), u), 1e-15);
  EXPECT_LT(rel_l2(schrodinger_physical_of(schrodinger_profile_of(u, 2.5), 2.5), u), 1e-13);
  for (Branch b : {Branch::Plus, Branch::Minus}) {
    EXPECT_LT(rel_l2(wave_profile_of(u, b, 0.0), u), 1e-15);
    EXPECT_LT(rel_l2(wave_physical_of(wave_profile_of(u, b, 1.7), b, 1.7), u), 1e-13);
  }
}

TEST(Profiles, GroupLaw) {
  Grid g(2, 32, 8.0);
  Field u = to_frequency(random_field(g, 6));
  EXPECT_LT(rel_l2(schrodinger_profile_of(schrodinger_profile_of(u, 0.4), 1.1), schrodinger_profile_of(u, 1.5)),
            1e-13);
  EXPECT_LT(rel_l2(wave_profile_of(wave_profile_of(u, Branch::Plus, 0.4), Branch::Plus, 1.1),
                   wave_profile_of(u, Branch::Plus, 1.5)),
            1e-13);
}

TEST(Profiles, GroupsCommuteWithRadialMultipliers) {
  Grid g(3, 16, 8.0);
  Field v = random_field(g, 7);
  Symbol radial = [](const Vec3& k) { return cplx(std::exp(-(k[0] * k[0] + k[1] * k[1] + k[2] * k[2])), 0.0); };
  EXPECT_LT(rel_l2(apply_multiplier(schrodinger_group(v, 1.3), radial),
                   schrodinger_group(apply_multiplier(v, radial), 1.3)),
            1e-13);
  EXPECT_LT(rel_l2(lambda_pow(wave_half_group(v, Branch::Minus, 0.9), 1.5),
                   wave_half_group(lambda_pow(v, 1.5), Branch::Minus, 0.9)),
            1e-13);
}

TEST(Profiles, MinusProfileFromRealityRelation) {
  Grid g(2, 16, 8.0);
  Field n0 = remove_mean(random_field(g, 8, true));
  Field wplus = to_frequency(n0);
  // For real n, w- = -conj(w+), so g-(k) = -conj(g+(-k)) and the w- built
  // from it is -n.
  Field wminus = to_physical(minus_profile_from_plus(wplus));
  Field expected = -1.0 * n0;
  EXPECT_LT(max_diff(wminus, expected), 1e-13);
}

TEST(WrapTimes, Definitions) {
  Grid g(3, 64, 64.0);
  EXPECT_DOUBLE_EQ(wave_wrap_time(g), 32.0);
  EXPECT_DOUBLE_EQ(schrodinger_wrap_time(g), 64.0 / (4.0 * g.max_wavenumber()));
  EXPECT_DOUBLE_EQ(schrodinger_wrap_time(g, 2.0), 8.0);
  EXPECT_THROW(schrodinger_wrap_time(g, 0.0), ContractError);
}

TEST(WrapTimes, EffectiveWavenumberOfPlaneWave) {
  Grid g(3, 16, 2.0 * std::numbers::pi);
  Field w = plane_wave(g, {2.0, 0.0, 0.0});
  EXPECT_NEAR(effective_wavenumber(w), 3.0 * 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_THROW(effective_wavenumber(Field(g, Space::Physical)), ContractError);
}

}  // namespace
}  // namespace zk
