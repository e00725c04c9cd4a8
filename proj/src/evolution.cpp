#include "zk/evolution.hpp"

#include <cmath>
#include <sstream>

#include "zk/error.hpp"
#include "zk/fft.hpp"
#include "zk/kernels.hpp"
#include "zk/spectral.hpp"

namespace zk {

namespace kp = kernels::parallel;

State::State(const Grid& grid)
    : fhat(grid, Space::Frequency),
      gplus_hat(grid, Space::Frequency),
      fplus_hat(grid, Space::Frequency),
      fminus_hat(grid, Space::Frequency),
      gacc_hat(grid, Space::Frequency) {}

Field reduce_to_first_order(const Field& n0, const Field& n1) {
  double frac = zero_mode_fraction(n1);
  if (frac > 1e-12) {
    std::ostringstream msg;
    msg << "reduce_to_first_order: n1 has a non-zero mean (relative zero mode " << frac << ")";
    throw ContractError(msg.str());
  }
  Field w = lambda_pow(n1, -1.0, ZeroMode::SetToZero);
  w *= cplx{0.0, 1.0};
  w += in_space(n0, Space::Frequency);
  return w;
}

Field reconstruct_n(const Field& wplus) {
  return real_part(in_space(wplus, Space::Physical));
}

Field reconstruct_nt(const Field& wplus) {
  Field im = imag_part(in_space(wplus, Space::Physical));
  return real_part(to_physical(lambda_pow(im, 1.0)));
}

State initial_state(const Field& u0, const Field& n0, const Field& n1) {
  State s(u0.grid());
  s.fhat = dealias(u0);
  s.gplus_hat = dealias(reduce_to_first_order(n0, n1));
  return s;
}

struct Evolution::Rates {
  Field df, dg, dfp, dfm, dgacc;
  explicit Rates(const Grid& g)
      : df(g, Space::Frequency),
        dg(g, Space::Frequency),
        dfp(g, Space::Frequency),
        dfm(g, Space::Frequency),
        dgacc(g, Space::Frequency) {}
};

Evolution::Evolution(const Grid& grid, double gamma, Coupling coupling)
    : grid_(grid), gamma_(gamma), coupling_(coupling), source_symbol_(grid.size()) {
  const Lattice& lat = lattice_for(grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    source_symbol_[i] = lat.kabs[i] > 0.0 ? lat.dealias[i] * std::pow(lat.kabs[i], gamma) : 0.0;
}

Field Evolution::u_physical(const State& state) const {
  return to_physical(schrodinger_physical_of(state.fhat, state.t));
}

Field Evolution::wplus_physical(const State& state) const {
  return to_physical(wave_physical_of(state.gplus_hat, Branch::Plus, state.t));
}

Evolution::Rates Evolution::rates(const Field& fhat, const Field& ghat, double t) const {
  Rates r(grid_);
  if (coupling_ == Coupling::LinearOnly) return r;

  const Lattice& lat = lattice_for(grid_);
  const std::size_t n = grid_.size();
  const auto count = static_cast<long>(n);

  // One exponential per shell: e^{-it|k|^2} and e^{-it|k|}.
  const std::size_t shells = lat.shell_k2.size();
  std::vector<cplx> schrod(shells), wave(shells);
  for (std::size_t m = 0; m < shells; ++m) {
    schrod[m] = std::polar(1.0, -t * lat.shell_k2[m]);
    wave[m] = std::polar(1.0, -t * lat.shell_kabs[m]);
  }

  // Physical u and w+ at time t.
  Buffer spec_u(n), spec_w(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    spec_u[i] = fhat[i] * schrod[lat.shell[i]];
    spec_w[i] = ghat[i] * wave[lat.shell[i]];
  }
  Buffer u(n), wp(n);
  fft::inverse(grid_, spec_u, u);
  fft::inverse(grid_, spec_w, wp);

  // Reuse the spectral buffers for the products.
  Buffer& prod_plus = spec_u;
  Buffer& prod_minus = spec_w;
  Buffer density(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    prod_plus[i] = wp[i] * u[i];
    prod_minus[i] = -std::conj(wp[i]) * u[i];
    density[i] = std::norm(u[i]);
  }

  fft::forward(grid_, prod_plus, r.dfp.values());
  fft::forward(grid_, prod_minus, r.dfm.values());
  fft::forward(grid_, density, r.dgacc.values());

  // Dealias, rotate back to profile variables, and combine.
  const cplx minus_half_i{0.0, -0.5};
  const cplx minus_i{0.0, -1.0};
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const std::uint32_t m = lat.shell[i];
    const cplx ps = std::conj(schrod[m]) * lat.dealias[i];
    const cplx pw = std::conj(wave[m]) * source_symbol_[i];
    r.dfp[i] *= ps;
    r.dfm[i] *= ps;
    r.dgacc[i] *= pw;
    r.df[i] = minus_half_i * (r.dfp[i] - r.dfm[i]);
    r.dg[i] = minus_i * r.dgacc[i];
  }
  return r;
}

ProfileRates Evolution::rhs_profiles(const State& state) const {
  Rates r = rates(state.fhat, state.gplus_hat, state.t);
  return {std::move(r.df), std::move(r.dg)};
}

State Evolution::step(const State& s, double dt) const {
  if (!(dt > 0.0)) throw ContractError("step: dt must be positive");
  const double t = s.t;

  auto shifted = [](const Field& base, const Field& rate, double h) {
    Field out = base;
    kp::axpy(h, rate.values(), out.values());
    return out;
  };

  Rates k1 = rates(s.fhat, s.gplus_hat, t);
  Rates k2 = rates(shifted(s.fhat, k1.df, 0.5 * dt), shifted(s.gplus_hat, k1.dg, 0.5 * dt), t + 0.5 * dt);
  Rates k3 = rates(shifted(s.fhat, k2.df, 0.5 * dt), shifted(s.gplus_hat, k2.dg, 0.5 * dt), t + 0.5 * dt);
  Rates k4 = rates(shifted(s.fhat, k3.df, dt), shifted(s.gplus_hat, k3.dg, dt), t + dt);

  State out = s;
  auto combine = [dt](Field& y, const Field& a, const Field& b, const Field& c, const Field& d) {
    const double w1 = dt / 6.0, w2 = dt / 3.0;
    const auto n = static_cast<long>(y.size());
    auto yv = y.values();
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) yv[i] += w1 * (a[i] + d[i]) + w2 * (b[i] + c[i]);
  };
  if (coupling_ == Coupling::Nonlinear) {
    combine(out.fhat, k1.df, k2.df, k3.df, k4.df);
    combine(out.gplus_hat, k1.dg, k2.dg, k3.dg, k4.dg);
    combine(out.fplus_hat, k1.dfp, k2.dfp, k3.dfp, k4.dfp);
    combine(out.fminus_hat, k1.dfm, k2.dfm, k3.dfm, k4.dfm);
    combine(out.gacc_hat, k1.dgacc, k2.dgacc, k3.dgacc, k4.dgacc);
  }
  out.t = t + dt;
  out.step_count = s.step_count + 1;

  double check = kp::sum_abs_pow(out.fhat.values(), 2.0) + kp::sum_abs_pow(out.gplus_hat.values(), 2.0);
  if (!std::isfinite(check)) {
    std::ostringstream msg;
    msg << "non-finite profile values after step " << out.step_count << " at t = " << out.t;
    throw NumericalError(msg.str(), out.t);
  }
  return out;
}

RunSummary run(const Evolution& evolution, State state, const RunOptions& options,
               RunObserver& observer) {
  if (!(options.dt > 0.0)) throw ContractError("run: dt must be positive");
  if (options.record_stride <= 0) throw ContractError("run: record stride must be positive");
  auto multiple = [&](int stride) { return stride == 0 || stride % options.record_stride == 0; };
  if (!multiple(options.snapshot_stride) || !multiple(options.checkpoint_stride))
    throw ContractError("run: snapshot and checkpoint strides must be multiples of the record stride");

  double dt = options.dt;
  int scale = 1;  // steps per original step after dt halvings
  int halvings = 0;
  int records = 0;
  const double e0 = options.energy ? options.energy(state) : 0.0;

  auto emit = [&](const State& s) {
    observer.on_record(s);
    ++records;
    std::uint64_t base_steps = s.step_count / static_cast<std::uint64_t>(scale);
    if (options.snapshot_stride > 0 && base_steps % options.snapshot_stride == 0) observer.on_snapshot(s);
    if (options.checkpoint_stride > 0 && base_steps % options.checkpoint_stride == 0)
      observer.on_checkpoint(s);
  };

  if (options.emit_initial_record) emit(state);

  const double tol = 1e-9 * std::max(1.0, std::abs(options.t_end));
  while (state.t < options.t_end - tol) {
    State anchor = state;
    bool accepted = false;
    while (!accepted) {
      State trial = anchor;
      const int steps = options.record_stride * scale;
      for (int i = 0; i < steps && trial.t < options.t_end - tol; ++i) trial = evolution.step(trial, dt);
      if (options.energy && e0 != 0.0) {
        double drift = std::abs(options.energy(trial) - e0) / std::abs(e0);
        if (drift > options.energy_drift_tol) {
          if (halvings >= 1) {
            std::ostringstream msg;
            msg << "energy drift " << drift << " exceeds " << options.energy_drift_tol
                << " after halving dt to " << dt;
            throw NumericalError(msg.str(), trial.t);
          }
          ++halvings;
          dt *= 0.5;
          scale *= 2;
          // Re-index so record/snapshot strides keep their physical times.
          anchor.step_count *= 2;
          continue;
        }
      }
      state = std::move(trial);
      accepted = true;
    }
    emit(state);
  }
  return {std::move(state), dt, halvings, records};
}

}  // namespace zk
