#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "zk/field.hpp"
#include "zk/spectral.hpp"

namespace zk::testing {

inline Field random_field(const Grid& grid, std::uint64_t seed, bool real = false) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Field f(grid, Space::Physical);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = cplx(normal(rng), real ? 0.0 : normal(rng));
  return f;
}

inline Field remove_mean(const Field& f) {
  Field hat = in_space(f, Space::Frequency);
  hat[0] = 0.0;
  return in_space(hat, f.space());
}

/// Random field restricted to the dealiased band, with zero mean.
inline Field band_limited(const Grid& grid, std::uint64_t seed, bool real = false) {
  Field hat = dealias(random_field(grid, seed, real));
  hat[0] = 0.0;
  return to_physical(hat);
}

inline Field plane_wave(const Grid& grid, const Vec3& k) {
  return Field::from_function(grid, [&](const Vec3& x) {
    return std::polar(1.0, k[0] * x[0] + k[1] * x[1] + k[2] * x[2]);
  });
}

inline Field gaussian(const Grid& grid, double sigma) {
  return Field::from_function(grid, [&](const Vec3& x) {
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return cplx(std::exp(-r2 / (2.0 * sigma * sigma)), 0.0);
  });
}

/// max_j |a_j - b_j|, compared in the space of `a`.
inline double max_diff(const Field& a, const Field& b) {
  Field bb = in_space(b, a.space());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - bb[i]));
  return m;
}

inline double max_abs(const Field& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

inline double rel_l2(const Field& a, const Field& b) {
  Field bb = in_space(b, a.space());
  return l2_norm_spectral(a - bb) / l2_norm_spectral(bb);
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("zk_tests_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace zk::testing
