#pragma once

#include <cstdint>

#include "zk/grid.hpp"
#include "zk/propagators.hpp"

namespace zk {

/// phi_+-(xi, eta) = |xi|^2 - |xi - eta|^2 +- |eta|  (Schrodinger-wave phase).
double phi(const Vec3& xi, const Vec3& eta, Branch branch);
/// Same phase written as 2 xi.eta - |eta|^2 +- |eta|.
double phi_expanded(const Vec3& xi, const Vec3& eta, Branch branch);

/// psi_+-(xi, eta) = -+|xi| - |xi - eta|^2 + |eta|^2  (wave-Schrodinger phase).
double psi(const Vec3& xi, const Vec3& eta, Branch branch);
/// Same phase written as -+|xi| - |xi|^2 + 2 xi.eta.
double psi_expanded(const Vec3& xi, const Vec3& eta, Branch branch);

Vec3 grad_eta_phi(const Vec3& xi, const Vec3& eta, Branch branch);
Vec3 grad_xi_phi(const Vec3& xi, const Vec3& eta, Branch branch);
Vec3 grad_eta_psi(const Vec3& xi, const Vec3& eta, Branch branch);

// The evolution's w+ mode at eta oscillates like exp(-i t |eta|), so the
// bilinear phase it produces against a Schrodinger mode is the "-" phase
// above; the w+ source term likewise carries psi_-. These helpers give the
// phase attached to each half-wave.
double duhamel_phase_f(const Vec3& xi, const Vec3& eta, Branch halfwave);
double duhamel_phase_g(const Vec3& xi, const Vec3& eta, Branch halfwave);

struct NullIdentityReport {
  std::uint64_t samples = 0;
  double max_residual = 0.0;  // max | |xi| - 0.5 (xi/|xi|) . grad_eta psi |
  double seconds = 0.0;
};

/// Sweeps random (xi, eta) pairs, both branches.
NullIdentityReport check_null_identity_psi(std::uint64_t samples, std::uint64_t seed = 1);

struct PseudoScalingReport {
  std::uint64_t samples = 0;
  int sign_radial = 0;  // s1 in  grad_xi phi = s1 2 e (e . grad_eta phi) + s2 2 (phi/|eta|) e
  int sign_phase = 0;   // s2
  double max_residual = 0.0;
  double max_scalar_residual = 0.0;  // | e . grad_eta phi - phi/|eta| + |eta| |
  double seconds = 0.0;
};

/// Finds the unique sign pattern (s1, s2) for which
///     grad_xi phi = s1 2 e (e . grad_eta phi) + s2 2 (phi / |eta|) e,  e = eta/|eta|
/// holds at every sample, and reports its residual. Throws if no pattern fits.
PseudoScalingReport check_pseudo_scaling_phi(std::uint64_t samples, std::uint64_t seed = 2);

}  // namespace zk
