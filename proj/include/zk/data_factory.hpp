#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zk/field.hpp"
#include "zk/params.hpp"

namespace zk {

enum class DataFamily { Gaussian, ModulatedGaussian, RandomBandLimited };

const char* to_string(DataFamily family);
DataFamily parse_data_family(const std::string& name);

struct DataSpec {
  DataFamily family = DataFamily::Gaussian;
  double amplitude = 1.0;
  double sigma = 4.0;
  Vec3 k0{0.0, 0.0, 0.0};  // modulation wavevector
  std::uint64_t seed = 1;
};

/// Physical initial data (u0, n0, dn/dt(0) = n1).
struct InitialData {
  Field u0;
  Field n0;
  Field n1;
};

/// Builds centred, smooth data restricted to the dealiased band. n0 and n1
/// are real with their zero mode removed exactly.
///   Gaussian:          u0 = eps G,  n0 = eps G,  n1 = 0
///   ModulatedGaussian: u0 = eps G e^{i k0.x},  n0 = eps G,  n1 = eps (x_0/sigma^2) G
///   RandomBandLimited: eps G times seeded random fields with |k| <~ 2/sigma
/// where G = exp(-|x|^2 / (2 sigma^2)).
InitialData make_data(const DataSpec& spec, const Grid& grid);

struct CertTerm {
  std::string name;
  double value = 0.0;
  bool pass = false;  // value <= eps0
};

struct CertReport {
  std::vector<CertTerm> terms;
  double schrodinger_total = 0.0;  // u0 condition, Sobolev + weighted
  double wave_total = 0.0;         // (n0, n1) condition, Sobolev + Besov + weighted
  bool zero_mean = true;
  double eps0 = 0.0;
  int n_mon = 0;
  int n_proof = 0;
  bool pass = false;

  std::vector<std::string> violations() const;
  std::string to_text() const;
};

/// Evaluates the smallness conditions on (u0, n0, n1) with N_mon standing in
/// for the proof's N. Failures are report entries, never exceptions.
CertReport certify_data(const Field& u0, const Field& n0, const Field& n1, const Params& params);

/// Amplitude at which `spec` passes certification with the given margin
/// (both totals = margin * eps0 at most).
double certified_amplitude(DataSpec spec, const Grid& grid, const Params& params, double margin = 0.9);

}  // namespace zk
