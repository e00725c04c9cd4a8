#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "zk/data_factory.hpp"
#include "zk/diagnostics.hpp"
#include "zk/error.hpp"
#include "zk/evolution.hpp"
#include "zk/phases.hpp"
#include "zk/propagators.hpp"

namespace zk {
namespace {

using namespace zk::testing;

State random_state(const Grid& g, double amplitude, std::uint64_t seed) {
  DataSpec spec;
  spec.family = DataFamily::RandomBandLimited;
  spec.amplitude = amplitude;
  spec.sigma = g.length() / 8.0;
  spec.seed = seed;
  InitialData d = make_data(spec, g);
  return initial_state(d.u0, d.n0, d.n1);
}

TEST(Reduction, StaticWaveData) {
  Grid g(3, 16, 8.0);
  Field n0 = remove_mean(random_field(g, 1, true));
  Field w = reduce_to_first_order(n0, Field(g, Space::Physical));
  EXPECT_LT(max_diff(w, n0), 1e-13 * max_abs(n0));
}

TEST(Reduction, PureVelocityData) {
  Grid g(3, 16, 8.0);
  Field m = remove_mean(random_field(g, 2, true));
  Field n1 = to_physical(lambda_pow(m, 1.0));
  Field w = reduce_to_first_order(Field(g, Space::Physical), n1);
  Field expected = cplx(0.0, 1.0) * m;
  EXPECT_LT(max_diff(w, expected), 1e-12 * max_abs(m));
}

TEST(Reduction, RoundTrip) {
  Grid g(3, 16, 8.0);
  Field n0 = remove_mean(random_field(g, 3, true));
  Field n1 = remove_mean(random_field(g, 4, true));
  Field w = reduce_to_first_order(n0, n1);
  EXPECT_LT(max_diff(reconstruct_n(w), n0), 1e-12 * max_abs(n0));
  EXPECT_LT(max_diff(reconstruct_nt(w), n1), 1e-12 * max_abs(n1));
}

TEST(Reduction, RealAndImaginaryWaveFields) {
  Grid g(2, 16, 8.0);
  Field m = remove_mean(random_field(g, 5, true));
  EXPECT_LT(max_diff(reconstruct_n(m), m), 1e-15);
  EXPECT_LT(max_abs(reconstruct_nt(m)), 1e-15);
  Field im = cplx(0.0, 1.0) * m;
  EXPECT_LT(max_abs(reconstruct_n(im)), 1e-15);
}

TEST(Reduction, RejectsVelocityWithMean) {
  Grid g(2, 16, 8.0);
  Field n1 = Field::from_function(g, [](const Vec3&) { return cplx(1.0, 0.0); });
  EXPECT_THROW(reduce_to_first_order(Field(g, Space::Physical), n1), ContractError);
}

TEST(Rhs, ZeroSchrodingerFieldGivesZeroRates) {
  Grid g(3, 16, 8.0);
  State s = random_state(g, 0.5, 6);
  s.fhat = Field(g, Space::Frequency);
  s.t = 0.7;
  ProfileRates r = Evolution(g, 1.0).rhs_profiles(s);
  EXPECT_EQ(max_abs(r.dfhat), 0.0);
  EXPECT_EQ(max_abs(r.dgplus_hat), 0.0);
}

TEST(Rhs, NoWaveFieldDrivesOnlyTheWave) {
  Grid g(3, 16, 8.0);
  const double gamma = 0.6, t = 0.4;
  State s = random_state(g, 0.5, 7);
  s.gplus_hat = Field(g, Space::Frequency);
  s.t = t;
  Evolution ev(g, gamma);
  ProfileRates r = ev.rhs_profiles(s);
  EXPECT_EQ(max_abs(r.dfhat), 0.0);
  ASSERT_GT(max_abs(r.dgplus_hat), 0.0);
  // -i e^{it|xi|} |xi|^gamma F[|u|^2], dealiased.
  Field u = ev.u_physical(s);
  Field density(g, Space::Physical);
  for (std::size_t i = 0; i < g.size(); ++i) density[i] = std::norm(u[i]);
  Field expected = dealias(lambda_pow(density, gamma));
  expected = wave_half_group(expected, Branch::Minus, t);
  expected *= cplx(0.0, -1.0);
  EXPECT_LT(max_diff(r.dgplus_hat, expected), 1e-12 * max_abs(expected));
}

TEST(Rhs, SingleModeDensityIsAnnihilated) {
  Grid g(3, 16, 2.0 * std::numbers::pi);
  State s(g);
  Index3 idx{g.mode_slot(2), g.mode_slot(-1), 0};
  s.fhat[g.ravel(idx)] = 0.1 * static_cast<double>(g.size());
  s.t = 0.3;
  ProfileRates r = Evolution(g, 1.0).rhs_profiles(s);
  EXPECT_LT(max_abs(r.dgplus_hat), 1e-12);
}

// One Schrodinger mode at xi - eta and one w+ mode at eta: the profile rate
// at xi oscillates in time with the bilinear phase of the interaction.
TEST(PhaseConvention, OneModeInteractionFrequency) {
  Grid g(3, 16, 2.0 * std::numbers::pi);  // dk = 1
  const Vec3 u_mode{1.0, 2.0, 0.0}, w_mode{1.0, 0.0, 1.0};
  const Vec3 xi{u_mode[0] + w_mode[0], u_mode[1] + w_mode[1], u_mode[2] + w_mode[2]};
  auto slot = [&](const Vec3& k) {
    return g.ravel({g.mode_slot(static_cast<int>(k[0])), g.mode_slot(static_cast<int>(k[1])),
                    g.mode_slot(static_cast<int>(k[2]))});
  };
  State s(g);
  s.fhat[slot(u_mode)] = 1e-3 * static_cast<double>(g.size());
  s.gplus_hat[slot(w_mode)] = 1e-3 * static_cast<double>(g.size());
  Evolution ev(g, 1.0);

  const double expected = duhamel_phase_f(xi, w_mode, Branch::Plus);
  EXPECT_NEAR(expected, phi(xi, w_mode, Branch::Minus), 1e-15);
  EXPECT_NEAR(expected, 9.0 - 5.0 - std::sqrt(2.0), 1e-14);

  const double dt = 0.05;
  cplx previous{};
  for (int j = 0; j <= 10; ++j) {
    s.t = j * dt;
    cplx rate = ev.rhs_profiles(s).dfhat[slot(xi)];
    ASSERT_GT(std::abs(rate), 0.0);
    if (j > 0) {
      double measured = std::arg(rate / previous) / dt;
      EXPECT_NEAR(measured, expected, 1e-6);
    }
    previous = rate;
  }
}

TEST(Step, LinearFlowKeepsProfilesFixed) {
  Grid g(3, 16, 8.0);
  State s0 = random_state(g, 0.5, 8);
  Evolution ev(g, 1.0, Coupling::LinearOnly);
  State s = s0;
  for (int i = 0; i < 20; ++i) s = ev.step(s, 0.05);
  EXPECT_LE(max_diff(s.fhat, s0.fhat), 1e-14 * max_abs(s0.fhat));
  EXPECT_LE(max_diff(s.gplus_hat, s0.gplus_hat), 1e-14 * max_abs(s0.gplus_hat));
  EXPECT_EQ(max_abs(s.fplus_hat), 0.0);
  EXPECT_EQ(max_abs(s.fminus_hat), 0.0);
  EXPECT_EQ(max_abs(s.gacc_hat), 0.0);
  EXPECT_NEAR(s.t, 1.0, 1e-14);
  EXPECT_EQ(s.step_count, 20u);
}

TEST(Step, AccumulatorsTrackProfileIncrements) {
  Grid g(2, 32, 16.0);
  State s0 = random_state(g, 0.8, 9);
  Evolution ev(g, 1.0);
  State s = s0;
  for (int i = 0; i < 40; ++i) s = ev.step(s, 0.025);
  Field df = s.fhat - s0.fhat;
  Field split = cplx(0.0, -0.5) * (s.fplus_hat - s.fminus_hat);
  EXPECT_LT(max_diff(df, split), 1e-13 * max_abs(df));
  Field dg = cplx(0.0, 1.0) * (s.gplus_hat - s0.gplus_hat);
  EXPECT_LT(max_diff(s.gacc_hat, dg), 1e-13 * max_abs(dg));
}

TEST(Step, WaveMeanAndRealityPreserved) {
  Grid g(3, 16, 8.0);
  State s = random_state(g, 0.8, 10);
  Evolution ev(g, 1.0);
  const cplx mean = s.gplus_hat[0];
  EXPECT_LT(std::abs(mean), 1e-12 * max_abs(s.gplus_hat));
  for (int i = 0; i < 20; ++i) {
    s = ev.step(s, 0.05);
    EXPECT_EQ(s.gplus_hat[0], mean);
    Field wp = wave_physical_of(s.gplus_hat, Branch::Plus, s.t);
    Field wm = wave_physical_of(minus_profile_from_plus(s.gplus_hat), Branch::Minus, s.t);
    Field n = to_physical(0.5 * (wp - wm));
    double im = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) im = std::max(im, std::abs(n[j].imag()));
    EXPECT_LE(im, 1e-10 * max_abs(n));
  }
}

TEST(Step, RejectsNonPositiveStep) {
  Grid g(2, 8, 8.0);
  EXPECT_THROW(Evolution(g, 1.0).step(State(g), 0.0), ContractError);
}

TEST(Step, BlowUpRaisesNumericalError) {
  Grid g(2, 16, 8.0);
  State s = random_state(g, 1.0, 11);
  s.fhat[3] = cplx(std::numeric_limits<double>::infinity(), 0.0);
  EXPECT_THROW(Evolution(g, 1.0).step(s, 0.01), NumericalError);
}

double richardson_order(const Grid& g, double amplitude, double t_end, double dt) {
  State s0 = random_state(g, amplitude, 12);
  Evolution ev(g, 1.0);
  auto integrate = [&](double h) {
    State s = s0;
    const int steps = static_cast<int>(std::lround(t_end / h));
    for (int i = 0; i < steps; ++i) s = ev.step(s, h);
    return s.fhat;
  };
  Field a = integrate(dt), b = integrate(dt / 2), c = integrate(dt / 4);
  return std::log2(l2_norm_spectral(a - b) / l2_norm_spectral(b - c));
}

TEST(Step, FourthOrderSelfConvergence) {
  Grid g(2, 32, 16.0);
  double order = richardson_order(g, 2.0, 1.0, 0.1);
  EXPECT_NEAR(order, 4.0, 0.2);
}

TEST(Step, MassAndEnergyDriftShrinkWithStep) {
  Grid g(2, 32, 16.0);
  State s0 = random_state(g, 0.5, 13);
  Evolution ev(g, 1.0);
  Conserved c0 = conserved_quantities(ev, s0);
  auto drift = [&](double h) {
    State s = s0;
    const int steps = static_cast<int>(std::lround(2.0 / h));
    for (int i = 0; i < steps; ++i) s = ev.step(s, h);
    Conserved c = conserved_quantities(ev, s);
    return std::make_pair(std::abs(c.mass - c0.mass) / c0.mass, std::abs(c.energy - c0.energy) / std::abs(c0.energy));
  };
  auto [m1, e1] = drift(0.0125);
  auto [m2, e2] = drift(0.00625);
  EXPECT_LT(m1, 1e-4);
  EXPECT_LT(e1, 1e-4);
  EXPECT_NEAR(m1 / m2, 16.0, 0.3 * 16.0);
  EXPECT_NEAR(e1 / e2, 16.0, 0.3 * 16.0);
}

class CountingObserver : public RunObserver {
 public:
  void on_record(const State& s) override { times.push_back(s.t); }
  void on_snapshot(const State&) override { ++snapshots; }
  void on_checkpoint(const State&) override { ++checkpoints; }
  std::vector<double> times;
  int snapshots = 0;
  int checkpoints = 0;
};

TEST(Run, ZeroDurationGivesSingleRecord) {
  Grid g(2, 16, 8.0);
  Evolution ev(g, 1.0);
  RunOptions opt;
  opt.t_end = 0.0;
  CountingObserver obs;
  RunSummary r = run(ev, random_state(g, 0.1, 14), opt, obs);
  ASSERT_EQ(obs.times.size(), 1u);
  EXPECT_EQ(obs.times[0], 0.0);
  EXPECT_EQ(r.records, 1);
}

TEST(Run, RecordSnapshotAndCheckpointCadence) {
  Grid g(2, 16, 8.0);
  Evolution ev(g, 1.0, Coupling::LinearOnly);
  RunOptions opt;
  opt.dt = 0.1;
  opt.t_end = 2.0;
  opt.record_stride = 2;
  opt.snapshot_stride = 4;
  opt.checkpoint_stride = 10;
  CountingObserver obs;
  RunSummary r = run(ev, random_state(g, 0.1, 15), opt, obs);
  EXPECT_EQ(obs.times.size(), 11u);
  EXPECT_EQ(obs.snapshots, 6);
  EXPECT_EQ(obs.checkpoints, 3);
  EXPECT_EQ(r.final_state.step_count, 20u);
  for (std::size_t i = 1; i < obs.times.size(); ++i) EXPECT_GT(obs.times[i], obs.times[i - 1]);

  opt.snapshot_stride = 3;
  EXPECT_THROW(run(ev, random_state(g, 0.1, 15), opt, obs), ContractError);
}

TEST(Run, DriftViolationHalvesStepOnce) {
  Grid g(2, 16, 8.0);
  Evolution ev(g, 1.0, Coupling::LinearOnly);
  RunOptions opt;
  opt.dt = 0.1;
  opt.t_end = 1.0;
  opt.record_stride = 10;
  opt.snapshot_stride = 10;
  // A spurious drift at step 10 forces one rollback; with dt halved the
  // first record lands on step 20 instead.
  opt.energy = [](const State& s) { return s.step_count == 10 ? 2.0 : 1.0; };
  CountingObserver obs;
  RunSummary r = run(ev, random_state(g, 0.1, 16), opt, obs);
  EXPECT_EQ(r.dt_halvings, 1);
  EXPECT_DOUBLE_EQ(r.dt_used, 0.05);
  EXPECT_EQ(r.final_state.step_count, 20u);
  EXPECT_NEAR(r.final_state.t, 1.0, 1e-12);
  EXPECT_EQ(obs.snapshots, 2);
}

TEST(Run, PersistentDriftIsNumericalFailure) {
  Grid g(2, 16, 8.0);
  Evolution ev(g, 1.0, Coupling::LinearOnly);
  RunOptions opt;
  opt.dt = 0.1;
  opt.t_end = 1.0;
  opt.energy = [](const State& s) { return 1.0 + s.t; };
  CountingObserver obs;
  EXPECT_THROW(run(ev, random_state(g, 0.1, 17), opt, obs), NumericalError);
}

}  // namespace
}  // namespace zk
