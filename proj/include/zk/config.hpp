#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zk/data_factory.hpp"
#include "zk/grid.hpp"
#include "zk/params.hpp"

namespace zk {

enum class RunMode { Nonlinear, LinearOnly, OracleCheck, IdentityCheck, DataCert, DecayFit };
const char* to_string(RunMode mode);
RunMode parse_run_mode(const std::string& name);

/// Every experiment setting. Defaults are the desk-scale configuration:
/// 64^3 box of side 64, Gaussian data of width 4, eps0 = 1e-2, gamma = 1.
struct RunConfig {
  // [grid]
  int dim = 3;
  int n = 64;
  double length = 64.0;
  // [params]
  double gamma = 1.0;
  std::optional<double> delta;  // empty = choose automatically
  double eps0 = 1e-2;
  int n_mon = 8;
  // [data]
  DataSpec data;
  std::optional<double> amplitude;  // empty = certified amplitude
  double margin = 0.9;
  // [run]
  RunMode mode = RunMode::Nonlinear;
  double dt = 1e-2;
  double t_end = 30.0;
  int diagnostics_stride = 10;
  int snapshot_stride = 0;
  int checkpoint_stride = 0;
  double energy_drift_tol = 1e-6;
  std::string output = "zkg_out";
  // [fit]
  std::string fit_column = "sup_u";
  double fit_t0 = 1.0;
  double fit_t1 = 30.0;
  std::string fit_input;  // empty = <output>/timeseries.csv
  // [oracle]
  int oracle_n = 8;
  double oracle_length = 8.0;
  double oracle_dt = 1e-2;
  double oracle_t_end = 1.0;
  double oracle_amplitude = 0.5;
  double oracle_sigma = 1.0;
  // [identities]
  long identity_samples = 1000000;
  // [thresholds]
  double band = 2.0;
  double oracle_tol = 1e-5;

  Grid grid() const { return Grid(dim, n, length); }
  Params params() const { return choose_parameters(gamma, delta, eps0, n_mon); }
  std::string timeseries_path() const;
};

/// Reads an INI-style file ("[section]" headers, "key = value" lines) and
/// applies "section.key=value" overrides on top. Missing keys keep their
/// defaults; unknown keys and invalid values raise ConfigError naming the field.
RunConfig load_config(const std::optional<std::string>& path,
                      const std::vector<std::string>& overrides);

/// Field-level validation; throws ConfigError. Called by load_config.
void validate(const RunConfig& config);

/// Serialises a configuration in the file format read by load_config.
std::string to_ini(const RunConfig& config);

}  // namespace zk
