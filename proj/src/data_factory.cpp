#include "zk/data_factory.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "zk/besov.hpp"
#include "zk/error.hpp"
#include "zk/spectral.hpp"

namespace zk {

const char* to_string(DataFamily family) {
  switch (family) {
    case DataFamily::Gaussian: return "gaussian";
    case DataFamily::ModulatedGaussian: return "modulated_gaussian";
    case DataFamily::RandomBandLimited: return "random";
  }
  return "?";
}

DataFamily parse_data_family(const std::string& name) {
  if (name == "gaussian") return DataFamily::Gaussian;
  if (name == "modulated_gaussian") return DataFamily::ModulatedGaussian;
  if (name == "random") return DataFamily::RandomBandLimited;
  throw ConfigError("data.family: unknown family '" + name +
                    "' (expected gaussian, modulated_gaussian or random)");
}

namespace {

double r2(const Vec3& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2]; }

Field zero_mean_real(const Field& physical) {
  Field hat = to_frequency(real_part(physical));
  hat[0] = 0.0;
  return real_part(to_physical(dealias(hat)));
}

Field band_limited(const Field& physical) { return to_physical(dealias(physical)); }

Field random_smooth(const Grid& grid, double sigma, std::mt19937_64& rng, bool real) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Field hat(grid, Space::Frequency);
  const Lattice& lat = lattice_for(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double re = normal(rng), im = normal(rng);
    double envelope = std::exp(-0.25 * sigma * sigma * lat.k2[i]) * lat.dealias[i];
    hat[i] = cplx{re, im} * envelope;
  }
  Field phys = to_physical(hat);
  if (real) phys = real_part(phys);
  double peak = lp_norm(phys, kInfinity);
  if (peak > 0.0) phys *= 1.0 / peak;
  return phys;
}

}  // namespace

InitialData make_data(const DataSpec& spec, const Grid& grid) {
  if (!(spec.sigma > 0.0)) throw ContractError("data: sigma must be positive");
  if (spec.sigma > grid.length() / 8.0) {
    std::ostringstream msg;
    msg << "data: sigma = " << spec.sigma << " exceeds L/8 = " << grid.length() / 8.0
        << "; the data would not be localised inside the box";
    throw ContractError(msg.str());
  }
  if (!(spec.amplitude >= 0.0)) throw ContractError("data: amplitude must be non-negative");
  const double eps = spec.amplitude;
  const double s2 = spec.sigma * spec.sigma;
  auto gauss = [&](const Vec3& x) { return std::exp(-0.5 * r2(x) / s2); };

  Field u0 = Field::from_function(grid, [&](const Vec3& x) { return cplx{eps * gauss(x), 0.0}; });
  Field n0 = u0;
  Field n1(grid, Space::Physical);

  switch (spec.family) {
    case DataFamily::Gaussian:
      break;
    case DataFamily::ModulatedGaussian: {
      u0 = Field::from_function(grid, [&](const Vec3& x) {
        double phase = spec.k0[0] * x[0] + spec.k0[1] * x[1] + spec.k0[2] * x[2];
        return eps * gauss(x) * std::polar(1.0, phase);
      });
      n1 = Field::from_function(grid, [&](const Vec3& x) { return cplx{eps * x[0] / s2 * gauss(x), 0.0}; });
      break;
    }
    case DataFamily::RandomBandLimited: {
      std::mt19937_64 rng(spec.seed);
      Field ru = random_smooth(grid, spec.sigma, rng, false);
      Field rn0 = random_smooth(grid, spec.sigma, rng, true);
      Field rn1 = random_smooth(grid, spec.sigma, rng, true);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        double w = eps * gauss(grid.position(i));
        u0[i] = w * ru[i];
        n0[i] = w * rn0[i];
        n1[i] = w * rn1[i] / spec.sigma;
      }
      break;
    }
  }
  return {band_limited(u0), zero_mean_real(n0), zero_mean_real(n1)};
}

std::vector<std::string> CertReport::violations() const {
  std::vector<std::string> out;
  for (const auto& t : terms)
    if (!t.pass) out.push_back(t.name);
  if (schrodinger_total > eps0) out.push_back("Schrodinger data total");
  if (wave_total > eps0) out.push_back("wave data total");
  if (!zero_mean) out.push_back("zero mean of (n0, n1)");
  return out;
}

std::string CertReport::to_text() const {
  std::ostringstream out;
  out.precision(6);
  out << "data certification (eps0 = " << eps0 << ", Sobolev index N_mon = " << n_mon
      << " in place of N_proof = " << n_proof << ")\n";
  for (const auto& t : terms)
    out << "  " << (t.pass ? "ok  " : "FAIL") << "  " << t.name << " = " << t.value << "\n";
  out << "  Schrodinger total = " << schrodinger_total << (schrodinger_total <= eps0 ? "  ok" : "  FAIL") << "\n";
  out << "  wave total        = " << wave_total << (wave_total <= eps0 ? "  ok" : "  FAIL") << "\n";
  out << "  zero mean (n0, n1): " << (zero_mean ? "ok" : "FAIL") << "\n";
  out << "  result: " << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

CertReport certify_data(const Field& u0, const Field& n0, const Field& n1, const Params& params) {
  CertReport report;
  report.eps0 = params.eps0;
  report.n_mon = params.n_mon;
  report.n_proof = params.n_proof;
  const Grid& grid = u0.grid();
  const int N = params.n_mon;

  auto japanese_x_sq = [](const Field& v) {
    Field phys = in_space(v, Space::Physical);
    Field out = multiply_by_weight(phys, 2);
    out += phys;
    return out;
  };
  const Lattice& lat = lattice_for(grid);
  std::vector<double> bracket(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) bracket[i] = std::sqrt(1.0 + lat.k2[i]);

  report.zero_mean = zero_mode_fraction(n0) <= 1e-12 && zero_mode_fraction(n1) <= 1e-12;
  Field n0_hat = to_frequency(in_space(n0, Space::Physical));
  Field n1_hat = in_space(n1, Space::Frequency);
  n0_hat[0] = 0.0;
  n1_hat[0] = 0.0;

  auto add = [&](std::string name, double value) {
    report.terms.push_back({std::move(name), value, value <= params.eps0});
    return value;
  };

  report.schrodinger_total += add("||u0||_{H^{N_mon+1}}", sobolev_norm(u0, N + 1));
  report.schrodinger_total += add("||<x>^2 u0||_{L^2}", lp_norm(japanese_x_sq(u0), 2.0));

  Field lam_n0 = lambda_pow(n0_hat, 1.0);
  double sob = std::hypot(sobolev_norm(lam_n0, N - 1), sobolev_norm(n1_hat, N - 1));
  report.wave_total += add("||(Lambda n0, n1)||_{H^{N_mon-1}}", sob);

  DyadicPartition partition(grid);
  double besov = besov_norm(partition, apply_symbol(lam_n0, bracket), 0.0, 1.0, 1.0) +
                 besov_norm(partition, apply_symbol(n1_hat, bracket), 0.0, 1.0, 1.0);
  report.wave_total += add("||<Lambda>(Lambda n0, n1)||_{B^0_{1,1}}", besov);

  double weighted = std::hypot(sobolev_norm(japanese_x_sq(to_physical(n0_hat)), 1.0),
                               sobolev_norm(japanese_x_sq(to_physical(n1_hat)), 1.0));
  report.wave_total += add("||<x>^2 (n0, n1)||_{H^1}", weighted);

  report.pass = report.zero_mean && report.schrodinger_total <= params.eps0 &&
                report.wave_total <= params.eps0;
  return report;
}

double certified_amplitude(DataSpec spec, const Grid& grid, const Params& params, double margin) {
  spec.amplitude = 1.0;
  InitialData unit = make_data(spec, grid);
  CertReport r = certify_data(unit.u0, unit.n0, unit.n1, params);
  double worst = std::max(r.schrodinger_total, r.wave_total);
  if (worst == 0.0) throw ContractError("certified_amplitude: data family produced a zero field");
  return margin * params.eps0 / worst;
}

}  // namespace zk
