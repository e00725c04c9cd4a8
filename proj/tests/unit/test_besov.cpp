#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "zk/besov.hpp"
#include "zk/error.hpp"
#include "zk/spectral.hpp"

namespace zk {
namespace {

using namespace zk::testing;
constexpr double kPi = std::numbers::pi;

TEST(Partition, ActiveRange) {
  Grid g(3, 64, 64.0);
  DyadicPartition p(g);
  EXPECT_EQ(p.k_min(), static_cast<int>(std::floor(std::log2(g.dk()))));
  EXPECT_EQ(p.k_max(), static_cast<int>(std::ceil(std::log2(std::sqrt(3.0) * g.dk() * 32))));
}

TEST(Partition, SumsToOneOnInteriorRange) {
  for (int dim : {1, 2, 3}) {
    Grid g(dim, 32, 10.0);
    DyadicPartition p(g);
    const Lattice& lat = lattice_for(g);
    double worst = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i) {
      double r = lat.kabs[i];
      double sum = 0.0;
      for (int k = p.k_min(); k <= p.k_max(); ++k) sum += p.shell_symbol(k, r);
      if (r >= 2.0 * std::ldexp(1.0, p.k_min()) && r <= std::ldexp(1.0, p.k_max() - 1))
        worst = std::max(worst, std::abs(sum - 1.0));
      // The truncated partition still sums to one on every non-zero lattice point.
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
    EXPECT_LE(worst, 1e-12);
  }
}

TEST(Partition, ShellSymbolsBoundedAndSupported) {
  Grid g(3, 16, 8.0);
  DyadicPartition p(g);
  for (int k = p.k_min(); k <= p.k_max(); ++k)
    for (double r = 0.0; r < 64.0; r += 0.01) {
      double v = p.shell_symbol(k, r);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      if (r < std::ldexp(1.0, k - 1) || r > std::ldexp(1.0, k + 1)) {
        EXPECT_EQ(v, 0.0);
      }
    }
}

TEST(Project, ModeOnShellBoundaryIsSplitExactly) {
  Grid g(3, 16, 2.0 * kPi);
  DyadicPartition p(g);
  Field mode = plane_wave(g, {4.0, 0.0, 0.0});  // |k0| = 2^2
  Field sum = to_physical(p.project(mode, 2) + p.project(mode, 3));
  EXPECT_LT(max_diff(sum, mode), 1e-13);
  EXPECT_LT(max_abs(to_physical(p.project(mode, 3))), 1e-15);
}

TEST(Project, DisjointSupportGivesZero) {
  Grid g(3, 32, 2.0 * kPi);
  DyadicPartition p(g);
  Field mode(g, Space::Frequency);
  mode[g.ravel({8, 4, 0})] = 1.0;  // |k0| >= 2^{1+2}
  EXPECT_EQ(max_abs(p.project(mode, 1)), 0.0);
}

TEST(Project, ShellsSumToField) {
  Grid g(3, 32, 12.0);
  DyadicPartition p(g);
  Field v = band_limited(g, 3);
  Field sum(g, Space::Frequency);
  for (int k = p.k_min(); k <= p.k_max(); ++k) sum += p.project(v, k);
  EXPECT_LT(rel_l2(sum, v), 1e-11);
}

TEST(Project, RejectsShellOutsideRange) {
  Grid g(2, 16, 8.0);
  DyadicPartition p(g);
  EXPECT_THROW(p.project(Field(g, Space::Physical), p.k_max() + 1), ContractError);
  EXPECT_THROW(p.project(Field(g, Space::Physical), p.k_min() - 1), ContractError);
}

// Field whose spectrum sits on the lattice points with |xi| within 3% of 2^k.
Field thin_shell(const Grid& g, int k) {
  Field hat = to_frequency(random_field(g, 11));
  const Lattice& lat = lattice_for(g);
  const double r0 = std::ldexp(1.0, k);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (std::abs(lat.kabs[i] - r0) > 0.03 * r0) hat[i] = 0.0;
  return hat;
}

TEST(BesovNorm, SingleShellBump) {
  Grid g(3, 32, 16.0);
  DyadicPartition p(g);
  const int k = 1;
  Field bump = thin_shell(g, k);
  ASSERT_GT(l2_norm_spectral(bump), 0.0);
  for (double s : {0.0, 1.0, 2.0})
    for (double pp : {1.0, 2.0, kInfinity})
      for (double q : {1.0, 2.0, kInfinity}) {
        double expected = std::pow(2.0, s * k) * lp_norm(p.project(bump, k), pp);
        EXPECT_NEAR(besov_norm(p, bump, s, pp, q), expected, 0.05 * expected);
      }
}

// The partition is linear, not quadratic: the shells satisfy
// sum_k <P_k u, u> = ||u||^2 exactly, while sum_k ||P_k u||^2 lies between
// ||u||^2 / 2 and ||u||^2 (sum psi_k = 1 with at most two non-zero psi_k).
TEST(BesovNorm, L2RelationsOfTheLinearPartition) {
  Grid g(3, 32, 16.0);
  DyadicPartition p(g);
  Field v = band_limited(g, 12);
  double l2 = lp_norm(v, 2.0);
  cplx pairing{0.0, 0.0};
  for (int k = p.k_min(); k <= p.k_max(); ++k) pairing += inner_product(to_physical(p.project(v, k)), v);
  EXPECT_NEAR(pairing.real(), l2 * l2, 1e-12 * l2 * l2);
  EXPECT_NEAR(pairing.imag(), 0.0, 1e-12 * l2 * l2);
  double b22 = besov_norm(p, v, 0.0, 2.0, 2.0);
  EXPECT_LE(b22, l2 * (1.0 + 1e-12));
  EXPECT_GE(b22, l2 / std::sqrt(2.0) * (1.0 - 1e-12));
}

TEST(BesovNorm, ZeroFieldAndMeanGuard) {
  Grid g(2, 16, 8.0);
  DyadicPartition p(g);
  EXPECT_EQ(besov_norm(p, Field(g, Space::Physical), 0.0, kInfinity, 1.0), 0.0);
  Field c = Field::from_function(g, [](const Vec3&) { return cplx(1.0, 0.0); });
  EXPECT_THROW(besov_norm(p, c, 0.0, 2.0, 2.0), ContractError);
  EXPECT_THROW(besov_norm(p, Field(g, Space::Physical), 0.0, 2.0, 0.5), ContractError);
}

// Laplacian of a Gaussian: smooth, localized, zero mean.
Field mexican_hat(const Grid& g, double sigma) {
  return Field::from_function(g, [&](const Vec3& x) {
    double r2 = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]) / (sigma * sigma);
    return cplx((g.dim() - r2) * std::exp(-0.5 * r2), 0.0);
  });
}

TEST(BesovNorm, IndependentOfBoxSize) {
  Grid small(3, 32, 32.0), large(3, 64, 64.0);
  DyadicPartition ps(small), pl(large);
  Field a = remove_mean(mexican_hat(small, 2.0));
  Field b = remove_mean(mexican_hat(large, 2.0));
  double na = besov_norm(ps, a, 0.0, kInfinity, 1.0);
  double nb = besov_norm(pl, b, 0.0, kInfinity, 1.0);
  EXPECT_NEAR(na, nb, 0.05 * nb);
}

TEST(BesovNorm, DominatesSupNorm) {
  Grid g(3, 32, 32.0);
  DyadicPartition p(g);
  for (Field v : {remove_mean(mexican_hat(g, 2.0)), band_limited(g, 13, true)}) {
    double b = besov_norm(p, v, 0.0, kInfinity, 1.0);
    EXPECT_GE(b, 0.95 * lp_norm(v, kInfinity));
  }
}

}  // namespace
}  // namespace zk
