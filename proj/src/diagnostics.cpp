#include "zk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zk/error.hpp"
#include "zk/kernels.hpp"
#include "zk/propagators.hpp"
#include "zk/spectral.hpp"

namespace zk {

namespace kp = kernels::parallel;

namespace {

double weight_time(double t) { return std::max(t, 1.0); }

/// L^p norm of the pointwise Euclidean magnitude of a vector field.
double vector_lp_norm(const std::vector<Field>& components, double p) {
  const Grid& g = components.front().grid();
  Field mag(g, Space::Physical);
  for (const Field& c : components) {
    Field phys = in_space(c, Space::Physical);
    for (std::size_t i = 0; i < g.size(); ++i) mag[i] += std::norm(phys[i]);
  }
  for (std::size_t i = 0; i < g.size(); ++i) mag[i] = std::sqrt(mag[i].real());
  return lp_norm(mag, p);
}

}  // namespace

const std::vector<std::string>& DiagnosticsRecord::column_names() {
  static const std::vector<std::string> names = {
      "t",        "mass",     "energy",  "sup_u",     "sup_n",   "sob_f",    "xf",
      "x2f",      "sob_g",    "besov_w", "x_sob_f",   "x_xf",    "x_x2f",    "x_sob_g",
      "x_besov_w", "g_xlam",  "g_laminv", "g_halfx",  "cauchy_f"};
  return names;
}

std::vector<double> DiagnosticsRecord::columns() const {
  return {t,        mass,     energy,   sup_u,    sup_n,    sob_f,       xf,
          x2f,      sob_g,    besov_w,  xnorm[0], xnorm[1], xnorm[2],    xnorm[3],
          xnorm[4], apriori_g[0], apriori_g[1], apriori_g[2], cauchy_f};
}

DiagnosticsRecord DiagnosticsRecord::from_columns(const std::vector<double>& v) {
  if (v.size() != column_names().size()) {
    std::ostringstream msg;
    msg << "diagnostics record needs " << column_names().size() << " columns, got " << v.size();
    throw ContractError(msg.str());
  }
  DiagnosticsRecord r;
  r.t = v[0];
  r.mass = v[1];
  r.energy = v[2];
  r.sup_u = v[3];
  r.sup_n = v[4];
  r.sob_f = v[5];
  r.xf = v[6];
  r.x2f = v[7];
  r.sob_g = v[8];
  r.besov_w = v[9];
  for (int j = 0; j < 5; ++j) r.xnorm[j] = v[10 + j];
  for (int j = 0; j < 3; ++j) r.apriori_g[j] = v[15 + j];
  r.cauchy_f = v[18];
  return r;
}

Conserved conserved_quantities(const Evolution& evolution, const State& state) {
  const Grid& g = state.grid();
  const double gamma = evolution.gamma();
  const Lattice& lat = lattice_for(g);
  const double vol = g.cell_volume();
  const double nn = static_cast<double>(g.size());

  Field u = evolution.u_physical(state);
  Field w = evolution.wplus_physical(state);
  Field n = reconstruct_n(w);
  Field nt = reconstruct_nt(w);

  Conserved c;
  c.mass = kp::sum_abs_pow(u.values(), 2.0) * vol;

  // |grad u|^2 through Parseval; |u hat| = |f hat|.
  double grad = kp::weighted_sum_sq(state.fhat.values(), lat.k2) * vol / nn;

  double coupling = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) coupling += n[i].real() * std::norm(u[i]);
  coupling *= vol;

  double kinetic = std::pow(l2_norm_spectral(lambda_pow(nt, -(1.0 + gamma) / 2.0)), 2);
  double potential = std::pow(l2_norm_spectral(lambda_pow(n, (1.0 - gamma) / 2.0, ZeroMode::SetToZero)), 2);
  c.energy = grad + coupling + 0.5 * kinetic + 0.5 * potential;
  return c;
}

Monitor::Monitor(const Grid& grid, const Params& params)
    : grid_(grid), params_(params), partition_(grid) {}

double Monitor::lambda_half_x_norm(const Field& g_hat) const {
  Field phys = in_space(g_hat, Space::Physical);
  double acc = 0.0;
  for (int a = 0; a < grid_.dim(); ++a) {
    Field xg = multiply_by_weight(phys, 1, a);
    acc += std::pow(l2_norm_spectral(lambda_pow(xg, 0.5)), 2);
  }
  return std::sqrt(acc);
}

DiagnosticsRecord Monitor::record(const Evolution& evolution, const State& state,
                                  const Field* previous_fhat) const {
  if (!(state.grid() == grid_)) throw ContractError("Monitor::record: grid mismatch");
  const double t = state.t;
  const double tw = weight_time(t);
  const double gamma = params_.gamma;
  const double alpha = params_.alpha;
  const double delta = params_.delta;
  const int nmon = params_.n_mon;

  DiagnosticsRecord r;
  r.t = t;
  Conserved c = conserved_quantities(evolution, state);
  r.mass = c.mass;
  r.energy = c.energy;

  Field u = evolution.u_physical(state);
  Field wplus_hat = wave_physical_of(state.gplus_hat, Branch::Plus, t);
  Field wplus = to_physical(wplus_hat);
  r.sup_u = lp_norm(u, kInfinity);
  r.sup_n = lp_norm(reconstruct_n(wplus), kInfinity);

  Field f = to_physical(state.fhat);
  r.sob_f = sobolev_norm(state.fhat, nmon);
  r.xf = lp_norm(multiply_by_weight(f, 1), 2.0);
  r.x2f = lp_norm(multiply_by_weight(f, 2), 2.0);
  r.sob_g = sobolev_norm(state.gplus_hat, nmon);
  r.besov_w = besov_norm(partition_, wplus_hat, 0.0, kInfinity, 1.0);

  r.xnorm[0] = std::pow(tw, -delta) * sobolev_norm(state.fhat, nmon + 1);
  r.xnorm[1] = std::pow(tw, -delta) * r.xf;
  r.xnorm[2] = std::pow(tw, -1.0 + 2.0 * alpha + delta) * r.x2f;
  r.xnorm[3] = r.sob_g;
  r.xnorm[4] = tw * r.besov_w;

  // Wave Duhamel term.
  const Field& G = state.gacc_hat;
  Field lam_g = to_physical(lambda_pow(G, 1.0, ZeroMode::SetToZero));
  std::vector<Field> comps;
  for (int a = 0; a < grid_.dim(); ++a)
    comps.push_back(wave_half_group(to_frequency(multiply_by_weight(lam_g, 1, a)), Branch::Plus, t));
  r.apriori_g[0] = std::pow(tw, 0.25 - 0.75 * gamma + 2.0 * alpha + 3.0 * delta) *
                   vector_lp_norm(comps, 4.0 / (1.0 + gamma));
  Field inv = wave_half_group(lambda_pow(G, -1.0, ZeroMode::SetToZero), Branch::Plus, t);
  r.apriori_g[1] = std::pow(tw, 2.0 * alpha + 3.0 * delta) * lp_norm(inv, 3.0);
  r.apriori_g[2] = lambda_half_x_norm(G);

  if (previous_fhat) r.cauchy_f = l2_norm_spectral(state.fhat - *previous_fhat);
  return r;
}

DecayFit fit_decay(const std::vector<std::pair<double, double>>& series, double t0, double t1) {
  std::vector<double> xs, ys;
  for (const auto& [t, v] : series) {
    if (t < t0 || t > t1) continue;
    if (!(t > 0.0) || !(v > 0.0)) {
      std::ostringstream msg;
      msg << "fit_decay: non-positive sample (t = " << t << ", value = " << v << ")";
      throw ContractError(msg.str());
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(v));
  }
  if (xs.size() < 8) {
    std::ostringstream msg;
    msg << "fit_decay: need at least 8 samples in [" << t0 << ", " << t1 << "], got " << xs.size();
    throw ContractError(msg.str());
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw ContractError("fit_decay: window contains a single time");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - fit.intercept - fit.slope * xs[i];
    ssr += e * e;
  }
  fit.stderr = std::sqrt(ssr / (m - 2.0) / sxx);
  fit.samples = xs.size();
  return fit;
}

void ScatteringMonitor::observe(const State& state) {
  if (last_f_) {
    acc_.f_increments.push_back(l2_norm_spectral(state.fhat - *last_f_));
    acc_.g_increments.push_back(l2_norm_spectral(state.gplus_hat - *last_g_));
  }
  acc_.times.push_back(state.t);
  last_f_ = state.fhat;
  last_g_ = state.gplus_hat;
  ++snapshots_;
}

ScatteringReport ScatteringMonitor::report() const {
  if (snapshots_ < 3) {
    std::ostringstream msg;
    msg << "scattering report needs at least 3 snapshots, have " << snapshots_;
    throw ContractError(msg.str());
  }
  ScatteringReport r = acc_;
  auto tail_ok = [](const std::vector<double>& inc) {
    std::size_t begin = inc.size() > 4 ? inc.size() - 4 : 0;
    for (std::size_t i = begin + 1; i < inc.size(); ++i)
      if (inc[i] > inc[i - 1]) return false;
    return true;
  };
  r.cauchy_consistent = tail_ok(r.f_increments) && tail_ok(r.g_increments);
  return r;
}

std::string ScatteringReport::to_text() const {
  std::ostringstream out;
  out << "scattering: " << times.size() << " snapshots, "
      << (cauchy_consistent ? "Cauchy-consistent" : "NOT Cauchy-consistent") << "\n";
  for (std::size_t i = 0; i < f_increments.size(); ++i)
    out << "  [" << times[i] << ", " << times[i + 1] << "]  |df| = " << f_increments[i]
        << "  |dg| = " << g_increments[i] << "\n";
  return out.str();
}

const char* to_string(DispersiveKind kind) {
  switch (kind) {
    case DispersiveKind::SchrodingerL6: return "schrodinger-L6";
    case DispersiveKind::SchrodingerLinf: return "schrodinger-Linf";
    case DispersiveKind::WaveBesov: return "wave-besov";
  }
  return "?";
}

DispersiveReport dispersive_estimate_check(DispersiveKind kind, const Field& data,
                                           const DispersiveWindow& window) {
  if (!(window.t0 > 0.0) || !(window.t1 > window.t0))
    throw ContractError("dispersive_estimate_check: window is empty");
  if (window.samples < 8) throw ContractError("dispersive_estimate_check: need at least 8 samples");
  const Grid& g = data.grid();
  Field hat = in_space(data, Space::Frequency);
  const bool wave = kind == DispersiveKind::WaveBesov;

  DispersiveReport r;
  r.kind = kind;
  r.wrap_time = window.wrap_time
                    ? *window.wrap_time
                    : (wave ? wave_wrap_time(g) : schrodinger_wrap_time(g, effective_wavenumber(hat)));
  if (window.t1 > r.wrap_time) {
    std::ostringstream msg;
    msg << "dispersive_estimate_check: window end " << window.t1
        << " exceeds the wrap-around time " << r.wrap_time;
    throw ContractError(msg.str());
  }

  std::optional<DyadicPartition> partition;
  double rhs = 0.0;
  double rate = 1.0;
  if (wave) {
    partition.emplace(g);
    rhs = besov_norm(*partition, hat, 2.0, 1.0, 1.0);
  } else {
    Field f = to_physical(hat);
    double xf = lp_norm(multiply_by_weight(f, 1), 2.0);
    if (kind == DispersiveKind::SchrodingerL6) {
      rhs = xf;
    } else {
      rhs = std::sqrt(xf * lp_norm(multiply_by_weight(f, 2), 2.0));
      rate = 1.5;
    }
  }
  if (!(rhs > 0.0)) throw ContractError("dispersive_estimate_check: datum has zero weighted norm");

  std::vector<std::pair<double, double>> series;
  const double l0 = std::log(window.t0), l1 = std::log(window.t1);
  for (int j = 0; j < window.samples; ++j) {
    double t = std::exp(l0 + (l1 - l0) * j / (window.samples - 1));
    double norm;
    if (wave) {
      norm = besov_norm(*partition, wave_half_group(hat, Branch::Plus, t), 0.0, kInfinity, 1.0);
    } else {
      Field u = schrodinger_group(hat, t);
      norm = lp_norm(u, kind == DispersiveKind::SchrodingerL6 ? 6.0 : kInfinity);
    }
    r.times.push_back(t);
    r.norms.push_back(norm);
    r.ratios.push_back(norm * std::pow(t, rate) / rhs);
    series.emplace_back(t, norm);
  }
  std::vector<double> sorted = r.ratios;
  std::sort(sorted.begin(), sorted.end());
  std::size_t m = sorted.size();
  double median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  r.max_over_median = sorted.back() / median;
  r.fit = fit_decay(series, window.t0, window.t1);
  r.pass = r.max_over_median <= window.band;
  return r;
}

std::string DispersiveReport::to_text() const {
  std::ostringstream out;
  out << to_string(kind) << ": slope " << fit.slope << " +- " << fit.stderr
      << ", max/median ratio " << max_over_median << " (wrap time " << wrap_time << ") "
      << (pass ? "PASS" : "FAIL") << "\n";
  for (std::size_t i = 0; i < times.size(); ++i)
    out << "  t = " << times[i] << "  norm = " << norms[i] << "  scaled = " << ratios[i] << "\n";
  return out.str();
}

}  // namespace zk
