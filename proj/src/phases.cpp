#include "zk/phases.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <random>

#include "zk/error.hpp"

namespace zk {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Vec3 random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace

double phi(const Vec3& xi, const Vec3& eta, Branch branch) {
  Vec3 d = sub(xi, eta);
  return dot(xi, xi) - dot(d, d) + sign_of(branch) * norm(eta);
}

double phi_expanded(const Vec3& xi, const Vec3& eta, Branch branch) {
  return 2.0 * dot(xi, eta) - dot(eta, eta) + sign_of(branch) * norm(eta);
}

double psi(const Vec3& xi, const Vec3& eta, Branch branch) {
  Vec3 d = sub(xi, eta);
  return -sign_of(branch) * norm(xi) - dot(d, d) + dot(eta, eta);
}

double psi_expanded(const Vec3& xi, const Vec3& eta, Branch branch) {
  return -sign_of(branch) * norm(xi) - dot(xi, xi) + 2.0 * dot(xi, eta);
}

Vec3 grad_eta_phi(const Vec3& xi, const Vec3& eta, Branch branch) {
  // d/d eta of -|xi - eta|^2 is 2 (xi - eta); of +-|eta| is +- eta/|eta|.
  double r = norm(eta);
  double s = sign_of(branch);
  Vec3 g;
  for (int j = 0; j < 3; ++j) g[j] = 2.0 * (xi[j] - eta[j]) + s * eta[j] / r;
  return g;
}

Vec3 grad_xi_phi(const Vec3& xi, const Vec3& eta, Branch) {
  Vec3 d = sub(xi, eta);
  return {2.0 * xi[0] - 2.0 * d[0], 2.0 * xi[1] - 2.0 * d[1], 2.0 * xi[2] - 2.0 * d[2]};
}

Vec3 grad_eta_psi(const Vec3& xi, const Vec3& eta, Branch) {
  // -|xi - eta|^2 contributes 2 (xi - eta), |eta|^2 contributes 2 eta.
  Vec3 d = sub(xi, eta);
  return {2.0 * d[0] + 2.0 * eta[0], 2.0 * d[1] + 2.0 * eta[1], 2.0 * d[2] + 2.0 * eta[2]};
}

double duhamel_phase_f(const Vec3& xi, const Vec3& eta, Branch halfwave) {
  return phi(xi, eta, opposite(halfwave));
}

double duhamel_phase_g(const Vec3& xi, const Vec3& eta, Branch halfwave) {
  return psi(xi, eta, opposite(halfwave));
}

NullIdentityReport check_null_identity_psi(std::uint64_t samples, std::uint64_t seed) {
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  NullIdentityReport report;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Vec3 xi = random_vec(rng);
    Vec3 eta = random_vec(rng);
    double r = norm(xi);
    if (r == 0.0) continue;
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      Vec3 g = grad_eta_psi(xi, eta, b);
      double rhs = 0.5 * dot(xi, g) / r;
      report.max_residual = std::max(report.max_residual, std::abs(r - rhs));
    }
    ++report.samples;
  }
  report.seconds = seconds_since(start);
  return report;
}

PseudoScalingReport check_pseudo_scaling_phi(std::uint64_t samples, std::uint64_t seed) {
  auto start = Clock::now();
  std::mt19937_64 rng(seed);
  constexpr std::array<std::array<int, 2>, 4> patterns{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  std::array<double, 4> worst{};
  double scalar_worst = 0.0;
  std::uint64_t used = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Vec3 xi = random_vec(rng);
    Vec3 eta = random_vec(rng);
    double r = norm(eta);
    if (r == 0.0) continue;
    ++used;
    Vec3 e{eta[0] / r, eta[1] / r, eta[2] / r};
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      Vec3 gx = grad_xi_phi(xi, eta, b);
      Vec3 ge = grad_eta_phi(xi, eta, b);
      double radial = dot(e, ge);
      double ratio = phi(xi, eta, b) / r;
      scalar_worst = std::max(scalar_worst, std::abs(radial - ratio + r));
      for (std::size_t p = 0; p < patterns.size(); ++p) {
        double s1 = patterns[p][0], s2 = patterns[p][1];
        for (int j = 0; j < 3; ++j) {
          double rhs = s1 * 2.0 * e[j] * radial + s2 * 2.0 * ratio * e[j];
          worst[p] = std::max(worst[p], std::abs(gx[j] - rhs));
        }
      }
    }
  }
  PseudoScalingReport report;
  report.samples = used;
  report.max_scalar_residual = scalar_worst;
  int fits = 0;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    if (worst[p] <= 1e-12) {
      ++fits;
      report.sign_radial = patterns[p][0];
      report.sign_phase = patterns[p][1];
      report.max_residual = worst[p];
    }
  }
  if (fits != 1)
    throw ContractError("pseudo-scaling check: expected exactly one fitting sign pattern, found " +
                        std::to_string(fits));
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace zk
