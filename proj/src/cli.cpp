#include "zk/cli.hpp"

#include <CLI11.hpp>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zk/checkpoint.hpp"
#include "zk/diagnostics.hpp"
#include "zk/duhamel_oracle.hpp"
#include "zk/error.hpp"
#include "zk/fft.hpp"
#include "zk/phases.hpp"
#include "zk/spectral.hpp"
#include "zk/timeseries.hpp"

namespace zk {

namespace fs = std::filesystem;

PreparedData prepare_data(const RunConfig& config) {
  Grid grid = config.grid();
  Params params = config.params();
  DataSpec spec = config.data;
  spec.amplitude = config.amplitude ? *config.amplitude
                                    : certified_amplitude(spec, grid, params, config.margin);
  InitialData data = make_data(spec, grid);
  CertReport cert = certify_data(data.u0, data.n0, data.n1, params);
  return {spec, std::move(data), std::move(cert)};
}

std::string OracleCheckResult::to_text() const {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific;
  out << "oracle check: max relative error " << max_error << (pass ? "  PASS" : "  FAIL") << "\n";
  for (std::size_t i = 0; i < times.size(); ++i)
    out << "  t = " << std::defaultfloat << times[i] << std::scientific << "  G+ " << error_g[i]
        << "  F+ " << error_fplus[i] << "  F- " << error_fminus[i] << "\n";
  return out.str();
}

OracleCheckResult oracle_check(const RunConfig& config) {
  Grid grid(2, config.oracle_n, config.oracle_length);
  DataSpec spec;
  spec.family = DataFamily::RandomBandLimited;
  spec.amplitude = config.oracle_amplitude;
  spec.sigma = config.oracle_sigma;
  spec.seed = config.data.seed;
  InitialData data = make_data(spec, grid);
  Evolution evolution(grid, config.gamma);
  State state = initial_state(data.u0, data.n0, data.n1);

  const double dt = config.oracle_dt;
  const long steps = std::lround(config.oracle_t_end / dt);
  ProfileHistory history{dt, {state.fhat}, {state.gplus_hat}};
  std::vector<State> states{state};
  for (long i = 0; i < steps; ++i) {
    state = evolution.step(state, dt);
    history.fhat.push_back(state.fhat);
    history.gplus_hat.push_back(state.gplus_hat);
    states.push_back(state);
  }

  auto rel = [](const Field& a, const Field& b) {
    double denom = l2_norm_spectral(b);
    double num = l2_norm_spectral(a - b);
    return denom > 0.0 ? num / denom : num;
  };

  OracleCheckResult r;
  for (int q = 1; q <= 4; ++q) {
    long j = steps * q / 4;
    j -= j % 2;  // composite Simpson needs an even interval count
    if (j == 0) continue;
    double t = j * dt;
    const State& s = states[static_cast<std::size_t>(j)];
    r.times.push_back(t);
    r.error_g.push_back(rel(s.gacc_hat, duhamel_oracle_G(history, t, Branch::Plus, config.gamma)));
    r.error_fplus.push_back(rel(s.fplus_hat, duhamel_oracle_F(history, t, Branch::Plus)));
    r.error_fminus.push_back(rel(s.fminus_hat, duhamel_oracle_F(history, t, Branch::Minus)));
    r.max_error = std::max({r.max_error, r.error_g.back(), r.error_fplus.back(), r.error_fminus.back()});
  }
  r.pass = r.max_error <= config.oracle_tol;
  return r;
}

namespace {

class PipelineObserver : public RunObserver {
 public:
  PipelineObserver(const Evolution& evolution, const Monitor& monitor, TimeseriesWriter& writer,
                   const std::string& output, bool quiet, std::optional<Field> previous)
      : evolution_(evolution), monitor_(monitor), writer_(writer), output_(output), quiet_(quiet),
        previous_(std::move(previous)) {}

  void on_record(const State& s) override {
    DiagnosticsRecord r = monitor_.record(evolution_, s, previous_ ? &*previous_ : nullptr);
    writer_.append(r);
    previous_ = s.fhat;
    if (!quiet_)
      std::fprintf(stdout, "t = %10.4f  mass = %.10e  energy = %.10e  |u|inf = %.4e  |n|inf = %.4e\n", r.t,
                   r.mass, r.energy, r.sup_u, r.sup_n);
  }
  void on_snapshot(const State& s) override { scattering.observe(s); }
  void on_checkpoint(const State& s) override {
    char name[64];
    std::snprintf(name, sizeof name, "checkpoint_%010" PRIu64 ".zkg", s.step_count);
    std::string path = (fs::path(output_) / name).string();
    write_checkpoint(s, evolution_.gamma(), path);
    checkpoints.push_back(path);
  }

  ScatteringMonitor scattering;
  std::vector<std::string> checkpoints;

 private:
  const Evolution& evolution_;
  const Monitor& monitor_;
  TimeseriesWriter& writer_;
  std::string output_;
  bool quiet_;
  std::optional<Field> previous_;
};

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir);
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::trunc);
  out << body;
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace

RunOutcome run_pipeline(const RunConfig& input, bool quiet, const std::optional<std::string>& resume_from) {
  RunConfig config = input;
  std::optional<Checkpoint> restart;
  if (resume_from) {
    try {
      restart = read_checkpoint(*resume_from);
    } catch (const ContractError& e) {
      throw IoError(e.what());
    }
    const Grid& g = restart->state.grid();
    config.dim = g.dim();
    config.n = g.n();
    config.length = g.length();
    config.gamma = restart->gamma;
    validate(config);
  }

  Grid grid = config.grid();
  Params params = config.params();
  const Coupling coupling = config.mode == RunMode::LinearOnly ? Coupling::LinearOnly : Coupling::Nonlinear;
  Evolution evolution(grid, config.gamma, coupling);
  Monitor monitor(grid, params);

  ensure_directory(config.output);
  State state(grid);
  std::optional<Field> previous;
  if (restart) {
    state = std::move(restart->state);
    previous = state.fhat;
  } else {
    PreparedData prepared = prepare_data(config);
    if (!prepared.certificate.pass) {
      std::string why = "data: initial data fail certification:";
      for (const auto& v : prepared.certificate.violations()) why += " " + v + ";";
      throw ConfigError(why);
    }
    state = initial_state(prepared.data.u0, prepared.data.n0, prepared.data.n1);
    std::error_code ec;
    fs::remove(config.timeseries_path(), ec);
    write_text((fs::path(config.output) / "config.ini").string(), to_ini(config));
    write_text((fs::path(config.output) / "certificate.txt").string(), prepared.certificate.to_text());
  }

  TimeseriesWriter writer(config.timeseries_path());
  PipelineObserver observer(evolution, monitor, writer, config.output, quiet, previous);

  RunOptions options;
  options.dt = config.dt;
  options.t_end = config.t_end;
  options.record_stride = config.diagnostics_stride;
  options.snapshot_stride = config.snapshot_stride;
  options.checkpoint_stride = config.checkpoint_stride;
  options.emit_initial_record = !restart;
  options.energy_drift_tol = config.energy_drift_tol;
  if (coupling == Coupling::Nonlinear)
    options.energy = [&evolution](const State& s) { return conserved_quantities(evolution, s).energy; };

  RunOutcome outcome{run(evolution, std::move(state), options, observer), writer.rows(), observer.checkpoints};

  std::ostringstream summary;
  summary.precision(17);
  summary << "final t = " << outcome.summary.final_state.t << "\nsteps = " << outcome.summary.final_state.step_count
          << "\ndt used = " << outcome.summary.dt_used << "\ndt halvings = " << outcome.summary.dt_halvings
          << "\nrecords = " << outcome.rows << "\n";
  if (observer.scattering.snapshots() >= 3) summary << observer.scattering.report().to_text();
  write_text((fs::path(config.output) / (restart ? "summary_resume.txt" : "summary.txt")).string(), summary.str());
  return outcome;
}

namespace {

int run_identities(const RunConfig& config) {
  auto samples = static_cast<std::uint64_t>(config.identity_samples);
  NullIdentityReport null = check_null_identity_psi(samples);
  PseudoScalingReport scaling = check_pseudo_scaling_phi(samples);
  std::printf("null identity (wave-Schrodinger phase): %" PRIu64 " samples, max residual %.3e, %.2f s\n",
              null.samples, null.max_residual, null.seconds);
  std::printf("pseudo-scaling (Schrodinger-wave phase): %" PRIu64
              " samples, sign pattern (%+d, %+d), max residual %.3e, scalar residual %.3e, %.2f s\n",
              scaling.samples, scaling.sign_radial, scaling.sign_phase, scaling.max_residual,
              scaling.max_scalar_residual, scaling.seconds);
  return 0;
}

int run_certify(const RunConfig& config) {
  PreparedData prepared = prepare_data(config);
  std::printf("amplitude = %.17g\n%s", prepared.spec.amplitude, prepared.certificate.to_text().c_str());
  return prepared.certificate.pass ? 0 : 1;
}

int run_oracle(const RunConfig& config) {
  OracleCheckResult r = oracle_check(config);
  std::fputs(r.to_text().c_str(), stdout);
  return r.pass ? 0 : 2;
}

int run_fit(const RunConfig& config) {
  std::string input = config.fit_input.empty() ? config.timeseries_path() : config.fit_input;
  auto records = parse_timeseries(input);
  const auto& names = DiagnosticsRecord::column_names();
  std::size_t column = 0;
  while (names[column] != config.fit_column) ++column;
  std::vector<std::pair<double, double>> series;
  for (const auto& r : records) series.emplace_back(r.t, r.columns()[column]);
  DecayFit fit = fit_decay(series, config.fit_t0, config.fit_t1);
  std::printf("%s: slope %.6f +- %.6f over [%g, %g] (%zu samples)\n", config.fit_column.c_str(), fit.slope,
              fit.stderr, config.fit_t0, config.fit_t1, fit.samples);
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"zkg: pseudospectral wave-Schrodinger simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::vector<std::string> overrides;
  std::string output;
  bool quiet = false;
  app.add_option("--config", config_path, "configuration file (INI)");
  app.add_option("--override", overrides, "section.key=value, repeatable")->allow_extra_args(false);
  app.add_option("--output", output, "output directory (overrides run.output)");
  app.add_flag("--quiet", quiet, "suppress progress output");

  auto* run_cmd = app.add_subcommand("run", "evolve certified data and record diagnostics");
  auto* certify_cmd = app.add_subcommand("certify", "evaluate the smallness conditions on the configured data");
  auto* identities_cmd = app.add_subcommand("identities", "check the phase identities on random samples");
  auto* oracle_cmd = app.add_subcommand("oracle", "compare the Duhamel accumulators with direct quadrature");
  auto* fit_cmd = app.add_subcommand("fit", "fit a decay exponent to a recorded time series");
  auto* resume_cmd = app.add_subcommand("resume", "continue a run from a checkpoint");
  std::string checkpoint_path;
  resume_cmd->add_option("checkpoint", checkpoint_path, "checkpoint file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    fft::configure_threads(0);
    if (!output.empty()) overrides.push_back("run.output=" + output);
    RunConfig config = load_config(config_path.empty() ? std::nullopt : std::optional(config_path), overrides);

    if (*identities_cmd) return run_identities(config);
    if (*certify_cmd) return run_certify(config);
    if (*oracle_cmd) return run_oracle(config);
    if (*fit_cmd) return run_fit(config);
    if (*resume_cmd) {
      run_pipeline(config, quiet, checkpoint_path);
      return 0;
    }
    if (*run_cmd) {
      switch (config.mode) {
        case RunMode::IdentityCheck: return run_identities(config);
        case RunMode::DataCert: return run_certify(config);
        case RunMode::OracleCheck: return run_oracle(config);
        case RunMode::DecayFit: return run_fit(config);
        case RunMode::Nonlinear:
        case RunMode::LinearOnly: run_pipeline(config, quiet); return 0;
      }
    }
    return 1;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "numerical failure at t = %g: %s\n", e.time(), e.what());
    return 2;
  } catch (const IoError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const ContractError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace zk
