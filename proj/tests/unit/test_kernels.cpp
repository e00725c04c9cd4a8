#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "helpers.hpp"
#include "zk/kernels.hpp"

namespace zk {
namespace {

namespace ks = kernels::serial;
namespace kp = kernels::parallel;

Buffer random_buffer(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Buffer b(n);
  for (auto& z : b) z = cplx(normal(rng), normal(rng));
  return b;
}

std::vector<double> random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 5.0);
  std::vector<double> w(n);
  for (auto& x : w) x = uni(rng);
  return w;
}

constexpr std::size_t kSize = 10007;  // not a multiple of the block count

TEST(Kernels, PointwiseKernelsMatchSerialReference) {
  Buffer x = random_buffer(kSize, 1), y = random_buffer(kSize, 2);
  std::vector<double> w = random_weights(kSize, 3);
  Buffer cw = random_buffer(kSize, 4);

  Buffer a = x, b = x;
  ks::scale(a, w);
  kp::scale(b, w);
  EXPECT_EQ(a, b);

  a = x, b = x;
  ks::scale(a, cw);
  kp::scale(b, cw);
  EXPECT_EQ(a, b);

  Buffer oa(kSize), ob(kSize);
  ks::multiply(x, y, oa);
  kp::multiply(x, y, ob);
  EXPECT_EQ(oa, ob);

  a = y, b = y;
  ks::axpy(cplx(0.3, -1.2), x, a);
  kp::axpy(cplx(0.3, -1.2), x, b);
  EXPECT_EQ(a, b);

  a = x, b = x;
  ks::rotate(a, w, 0.7);
  kp::rotate(b, w, 0.7);
  EXPECT_EQ(a, b);
}

TEST(Kernels, ShellRotationEqualsPointwiseRotation) {
  Grid g(3, 16, 9.0);
  const Lattice& lat = lattice_for(g);
  Buffer x = random_buffer(g.size(), 5);
  for (double t : {-2.3, 0.0, 0.41, 17.0}) {
    Buffer a = x, b = x, c = x;
    ks::rotate(a, lat.k2, t);
    ks::rotate_shells(b, lat.shell, lat.shell_k2, t);
    kp::rotate_shells(c, lat.shell, lat.shell_k2, t);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b, c);
    a = x, b = x;
    ks::rotate(a, lat.kabs, t);
    kp::rotate_shells(b, lat.shell, lat.shell_kabs, t);
    EXPECT_EQ(a, b);
  }
}

TEST(Kernels, ReductionsMatchSerialReference) {
  Buffer x = random_buffer(kSize, 6);
  std::vector<double> w = random_weights(kSize, 7);
  for (double p : {1.0, 2.0, 3.0, 6.0})
    EXPECT_NEAR(kp::sum_abs_pow(x, p), ks::sum_abs_pow(x, p), 1e-12 * ks::sum_abs_pow(x, p));
  EXPECT_EQ(kp::max_abs(x), ks::max_abs(x));
  EXPECT_NEAR(kp::weighted_sum_sq(x, w), ks::weighted_sum_sq(x, w), 1e-12 * ks::weighted_sum_sq(x, w));
}

TEST(Kernels, ReductionsIndependentOfThreadCount) {
  Buffer x = random_buffer(kSize, 8);
  std::vector<double> w = random_weights(kSize, 9);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  double s1 = kp::sum_abs_pow(x, 3.0), q1 = kp::weighted_sum_sq(x, w);
  omp_set_num_threads(4);
  double s4 = kp::sum_abs_pow(x, 3.0), q4 = kp::weighted_sum_sq(x, w);
  omp_set_num_threads(saved);
  EXPECT_EQ(s1, s4);
  EXPECT_EQ(q1, q4);
}

TEST(Kernels, EmptyInputs) {
  Buffer e;
  EXPECT_EQ(kp::sum_abs_pow(e, 2.0), 0.0);
  EXPECT_EQ(kp::max_abs(e), 0.0);
}

}  // namespace
}  // namespace zk
