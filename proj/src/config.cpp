#include "zk/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <set>
#include <sstream>

#include "zk/diagnostics.hpp"
#include "zk/error.hpp"

namespace zk {

namespace pt = boost::property_tree;

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Nonlinear: return "nonlinear";
    case RunMode::LinearOnly: return "linear-only";
    case RunMode::OracleCheck: return "oracle-check";
    case RunMode::IdentityCheck: return "identity-check";
    case RunMode::DataCert: return "data-cert";
    case RunMode::DecayFit: return "decay-fit";
  }
  return "?";
}

RunMode parse_run_mode(const std::string& name) {
  for (RunMode m : {RunMode::Nonlinear, RunMode::LinearOnly, RunMode::OracleCheck,
                    RunMode::IdentityCheck, RunMode::DataCert, RunMode::DecayFit})
    if (name == to_string(m)) return m;
  throw ConfigError("run.mode: unknown mode '" + name +
                    "' (expected nonlinear, linear-only, oracle-check, identity-check, data-cert or decay-fit)");
}

std::string RunConfig::timeseries_path() const { return output + "/timeseries.csv"; }

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "grid.dim",          "grid.n",           "grid.L",
      "params.gamma",      "params.delta",     "params.eps0",       "params.n_mon",
      "data.family",       "data.amplitude",   "data.sigma",        "data.k0",
      "data.seed",         "data.margin",
      "run.mode",          "run.dt",           "run.t_end",         "run.diagnostics_stride",
      "run.snapshot_stride", "run.checkpoint_stride", "run.energy_drift_tol", "run.output",
      "fit.column",        "fit.t0",           "fit.t1",            "fit.input",
      "oracle.n",          "oracle.L",         "oracle.dt",         "oracle.t_end",
      "oracle.amplitude",  "oracle.sigma",
      "identities.samples",
      "thresholds.band",   "thresholds.oracle_tol"};
  return keys;
}

template <typename T>
T number(const pt::ptree& tree, const std::string& key, T fallback) {
  auto node = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'));
  if (!node) return fallback;
  std::istringstream in(*node);
  T value{};
  in >> value;
  if (in.fail() || !(in >> std::ws).eof())
    throw ConfigError(key + ": cannot parse '" + *node + "' as a number");
  return value;
}

std::string text(const pt::ptree& tree, const std::string& key, const std::string& fallback) {
  auto node = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'));
  return node ? *node : fallback;
}

std::optional<double> number_or_auto(const pt::ptree& tree, const std::string& key,
                                     std::optional<double> fallback) {
  auto node = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'));
  if (!node) return fallback;
  if (*node == "auto") return std::nullopt;
  return number<double>(tree, key, 0.0);
}

Vec3 vector3(const pt::ptree& tree, const std::string& key, Vec3 fallback) {
  auto node = tree.get_optional<std::string>(pt::ptree::path_type(key, '.'));
  if (!node) return fallback;
  Vec3 v{0.0, 0.0, 0.0};
  std::stringstream ss(*node);
  std::string cell;
  int i = 0;
  while (std::getline(ss, cell, ',')) {
    if (i == 3) throw ConfigError(key + ": expected at most three comma-separated components");
    try {
      std::size_t used = 0;
      v[i] = std::stod(cell, &used);
      while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ConfigError(key + ": cannot parse component '" + cell + "'");
    }
    ++i;
  }
  return v;
}

void check_keys(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError(section + ": key outside of any [section]");
    for (const auto& [key, value] : body) {
      std::string full = section + "." + key;
      if (!known_keys().count(full)) throw ConfigError(full + ": unknown configuration key");
    }
  }
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fail(const std::string& field, const std::string& why) { throw ConfigError(field + ": " + why); }

}  // namespace

void validate(const RunConfig& c) {
  if (c.dim < 1 || c.dim > 3) fail("grid.dim", "must be 1, 2 or 3");
  if (!power_of_two(c.n) || c.n < 8) fail("grid.n", "must be a power of two >= 8");
  if (!(c.length > 0.0) || !std::isfinite(c.length)) fail("grid.L", "must be positive");
  if (!(c.gamma > 0.0 && c.gamma <= 1.0)) fail("params.gamma", "must lie in (0, 1]");
  if (c.delta && !(*c.delta > 0.0)) fail("params.delta", "must be positive or 'auto'");
  if (!(c.eps0 > 0.0 && c.eps0 < 1.0)) fail("params.eps0", "must lie in (0, 1)");
  if (c.n_mon < 0) fail("params.n_mon", "must be non-negative");
  if (!(c.data.sigma > 0.0)) fail("data.sigma", "must be positive");
  if (c.data.sigma > c.length / 8.0) fail("data.sigma", "must not exceed L/8 (data would not be localized)");
  if (c.amplitude && !(*c.amplitude >= 0.0)) fail("data.amplitude", "must be non-negative or 'auto'");
  if (!(c.margin > 0.0 && c.margin <= 1.0)) fail("data.margin", "must lie in (0, 1]");
  if (!(c.dt > 0.0)) fail("run.dt", "must be positive");
  if (!(c.t_end >= 0.0)) fail("run.t_end", "must be non-negative");
  if (c.diagnostics_stride < 1) fail("run.diagnostics_stride", "must be at least 1");
  if (c.snapshot_stride < 0 || c.snapshot_stride % c.diagnostics_stride != 0)
    fail("run.snapshot_stride", "must be 0 or a multiple of run.diagnostics_stride");
  if (c.checkpoint_stride < 0 || c.checkpoint_stride % c.diagnostics_stride != 0)
    fail("run.checkpoint_stride", "must be 0 or a multiple of run.diagnostics_stride");
  if (!(c.energy_drift_tol > 0.0)) fail("run.energy_drift_tol", "must be positive");
  if (c.output.empty()) fail("run.output", "must not be empty");
  if (!(c.fit_t0 > 0.0 && c.fit_t1 > c.fit_t0)) fail("fit.t0", "need 0 < fit.t0 < fit.t1");
  {
    const auto& names = DiagnosticsRecord::column_names();
    bool found = false;
    for (const auto& name : names) found = found || name == c.fit_column;
    if (!found || c.fit_column == "t") fail("fit.column", "not a diagnostics column: '" + c.fit_column + "'");
  }
  if (!power_of_two(c.oracle_n) || c.oracle_n < 8 || c.oracle_n > 16)
    fail("oracle.n", "must be 8 or 16 (the oracle is quadratic in the mode count)");
  if (!(c.oracle_length > 0.0)) fail("oracle.L", "must be positive");
  if (!(c.oracle_dt > 0.0)) fail("oracle.dt", "must be positive");
  if (!(c.oracle_t_end > 0.0)) fail("oracle.t_end", "must be positive");
  {
    double steps = c.oracle_t_end / c.oracle_dt;
    long k = std::lround(steps);
    if (std::abs(steps - static_cast<double>(k)) > 1e-9 * steps || k % 2 != 0)
      fail("oracle.t_end", "must be an even number of oracle.dt steps");
  }
  if (!(c.oracle_amplitude >= 0.0)) fail("oracle.amplitude", "must be non-negative");
  if (!(c.oracle_sigma > 0.0) || c.oracle_sigma > c.oracle_length / 8.0)
    fail("oracle.sigma", "must lie in (0, oracle.L/8]");
  if (c.identity_samples < 1) fail("identities.samples", "must be positive");
  if (!(c.band > 1.0)) fail("thresholds.band", "must exceed 1");
  if (!(c.oracle_tol > 0.0)) fail("thresholds.oracle_tol", "must be positive");
}

RunConfig load_config(const std::optional<std::string>& path, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  if (path) {
    try {
      pt::ini_parser::read_ini(*path, tree);
    } catch (const pt::ini_parser_error& e) {
      if (e.line() == 0) throw IoError("cannot read configuration: " + *path);
      throw ConfigError(e.what());
    }
  }
  for (const auto& item : overrides) {
    auto eq = item.find('=');
    auto dot = item.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ConfigError("--override '" + item + "': expected section.key=value");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    tree.put(pt::ptree::path_type(trim(key), '.'), trim(value));
  }
  check_keys(tree);

  RunConfig c;
  c.dim = number(tree, "grid.dim", c.dim);
  c.n = number(tree, "grid.n", c.n);
  c.length = number(tree, "grid.L", c.length);
  c.gamma = number(tree, "params.gamma", c.gamma);
  c.delta = number_or_auto(tree, "params.delta", c.delta);
  c.eps0 = number(tree, "params.eps0", c.eps0);
  c.n_mon = number(tree, "params.n_mon", c.n_mon);
  c.data.family = parse_data_family(text(tree, "data.family", to_string(c.data.family)));
  c.amplitude = number_or_auto(tree, "data.amplitude", c.amplitude);
  c.data.sigma = number(tree, "data.sigma", c.data.sigma);
  c.data.k0 = vector3(tree, "data.k0", c.data.k0);
  c.data.seed = number(tree, "data.seed", c.data.seed);
  c.margin = number(tree, "data.margin", c.margin);
  c.mode = parse_run_mode(text(tree, "run.mode", to_string(c.mode)));
  c.dt = number(tree, "run.dt", c.dt);
  c.t_end = number(tree, "run.t_end", c.t_end);
  c.diagnostics_stride = number(tree, "run.diagnostics_stride", c.diagnostics_stride);
  c.snapshot_stride = number(tree, "run.snapshot_stride", c.snapshot_stride);
  c.checkpoint_stride = number(tree, "run.checkpoint_stride", c.checkpoint_stride);
  c.energy_drift_tol = number(tree, "run.energy_drift_tol", c.energy_drift_tol);
  c.output = text(tree, "run.output", c.output);
  c.fit_column = text(tree, "fit.column", c.fit_column);
  c.fit_t0 = number(tree, "fit.t0", c.fit_t0);
  c.fit_t1 = number(tree, "fit.t1", c.fit_t1);
  c.fit_input = text(tree, "fit.input", c.fit_input);
  c.oracle_n = number(tree, "oracle.n", c.oracle_n);
  c.oracle_length = number(tree, "oracle.L", c.oracle_length);
  c.oracle_dt = number(tree, "oracle.dt", c.oracle_dt);
  c.oracle_t_end = number(tree, "oracle.t_end", c.oracle_t_end);
  c.oracle_amplitude = number(tree, "oracle.amplitude", c.oracle_amplitude);
  c.oracle_sigma = number(tree, "oracle.sigma", c.oracle_sigma);
  c.identity_samples = number(tree, "identities.samples", c.identity_samples);
  c.band = number(tree, "thresholds.band", c.band);
  c.oracle_tol = number(tree, "thresholds.oracle_tol", c.oracle_tol);
  validate(c);
  return c;
}

std::string to_ini(const RunConfig& c) {
  std::ostringstream out;
  out.precision(17);
  auto opt = [](const std::optional<double>& v) {
    if (!v) return std::string("auto");
    std::ostringstream s;
    s.precision(17);
    s << *v;
    return s.str();
  };
  out << "[grid]\ndim = " << c.dim << "\nn = " << c.n << "\nL = " << c.length << "\n\n";
  out << "[params]\ngamma = " << c.gamma << "\ndelta = " << opt(c.delta) << "\neps0 = " << c.eps0
      << "\nn_mon = " << c.n_mon << "\n\n";
  out << "[data]\nfamily = " << to_string(c.data.family) << "\namplitude = " << opt(c.amplitude)
      << "\nsigma = " << c.data.sigma << "\nk0 = " << c.data.k0[0] << "," << c.data.k0[1] << ","
      << c.data.k0[2] << "\nseed = " << c.data.seed << "\nmargin = " << c.margin << "\n\n";
  out << "[run]\nmode = " << to_string(c.mode) << "\ndt = " << c.dt << "\nt_end = " << c.t_end
      << "\ndiagnostics_stride = " << c.diagnostics_stride << "\nsnapshot_stride = " << c.snapshot_stride
      << "\ncheckpoint_stride = " << c.checkpoint_stride << "\nenergy_drift_tol = " << c.energy_drift_tol
      << "\noutput = " << c.output << "\n\n";
  out << "[fit]\ncolumn = " << c.fit_column << "\nt0 = " << c.fit_t0 << "\nt1 = " << c.fit_t1 << "\n";
  if (!c.fit_input.empty()) out << "input = " << c.fit_input << "\n";
  out << "\n[oracle]\nn = " << c.oracle_n << "\nL = " << c.oracle_length << "\ndt = " << c.oracle_dt
      << "\nt_end = " << c.oracle_t_end << "\namplitude = " << c.oracle_amplitude
      << "\nsigma = " << c.oracle_sigma << "\n\n";
  out << "[identities]\nsamples = " << c.identity_samples << "\n\n";
  out << "[thresholds]\nband = " << c.band << "\noracle_tol = " << c.oracle_tol << "\n";
  return out.str();
}

}  // namespace zk
