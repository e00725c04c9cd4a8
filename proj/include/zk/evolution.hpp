#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "zk/field.hpp"
#include "zk/propagators.hpp"

namespace zk {

/// Profiles plus the running Duhamel integrals, all in frequency space.
///
/// The accumulators are labelled by the half-wave they carry: F+ integrates
/// the w+ u interaction, F- the w- u interaction, G+ the source of the w+
/// equation. With these labels
///     f^(t) - f^(0) = -(i/2) (F+ - F-),      g^+(t) - g^+(0) = -i G+.
struct State {
  Field fhat;
  Field gplus_hat;
  Field fplus_hat;
  Field fminus_hat;
  Field gacc_hat;
  double t = 0.0;
  std::uint64_t step_count = 0;

  explicit State(const Grid& grid);
  const Grid& grid() const { return fhat.grid(); }
  ProfilePair profiles() const { return {fhat, gplus_hat, t}; }
};

/// w+ = i Lambda^{-1} n1 + n0 (frequency). n1 must have zero mean.
Field reduce_to_first_order(const Field& n0, const Field& n1);
/// n = Re w+ (physical, zero imaginary part).
Field reconstruct_n(const Field& wplus);
/// dn/dt = Lambda Im w+ (physical).
Field reconstruct_nt(const Field& wplus);

/// Initial state at t = 0 with the data restricted to the dealiased band.
State initial_state(const Field& u0, const Field& n0, const Field& n1);

enum class Coupling { Nonlinear, LinearOnly };

struct ProfileRates {
  Field dfhat;
  Field dgplus_hat;
};

/// Right-hand side of the profile system and the integrating-factor RK4
/// stepper built on it. Products are formed in physical space and truncated
/// with the 2/3 rule; the linear flow is exact because only profiles are
/// evolved.
class Evolution {
 public:
  Evolution(const Grid& grid, double gamma, Coupling coupling = Coupling::Nonlinear);

  const Grid& grid() const { return grid_; }
  double gamma() const { return gamma_; }
  Coupling coupling() const { return coupling_; }

  ProfileRates rhs_profiles(const State& state) const;
  State step(const State& state, double dt) const;

  Field u_physical(const State& state) const;
  Field wplus_physical(const State& state) const;

 private:
  struct Rates;
  Rates rates(const Field& fhat, const Field& ghat, double t) const;

  Grid grid_;
  double gamma_;
  Coupling coupling_;
  std::vector<double> source_symbol_;  // mask * |k|^gamma
};

struct RunOptions {
  double dt = 1e-2;
  double t_end = 0.0;
  int record_stride = 10;      // steps between records
  int snapshot_stride = 0;     // 0 disables; multiple of record_stride
  int checkpoint_stride = 0;   // 0 disables; multiple of record_stride
  bool emit_initial_record = true;
  /// When set, the drift |E - E0| / |E0| is checked at every record. A
  /// violation rolls back to the previous record and halves dt once; a
  /// second violation is a NumericalError.
  std::function<double(const State&)> energy;
  double energy_drift_tol = 1e-6;
};

class RunObserver {
 public:
  virtual ~RunObserver() = default;
  virtual void on_record(const State&) {}
  virtual void on_snapshot(const State&) {}
  virtual void on_checkpoint(const State&) {}
};

struct RunSummary {
  State final_state;
  double dt_used;
  int dt_halvings = 0;
  int records = 0;
};

RunSummary run(const Evolution& evolution, State state, const RunOptions& options,
               RunObserver& observer);

}  // namespace zk
