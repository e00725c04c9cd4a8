#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zk/besov.hpp"
#include "zk/evolution.hpp"
#include "zk/params.hpp"

namespace zk {

/// One time slice of every monitored quantity. Field order is the CSV
/// column order.
struct DiagnosticsRecord {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double sup_u = 0.0;
  double sup_n = 0.0;
  double sob_f = 0.0;   // ||f||_{H^{N_mon}}
  double xf = 0.0;      // || |x| f ||_{L^2}
  double x2f = 0.0;     // || |x|^2 f ||_{L^2}
  double sob_g = 0.0;   // ||g+||_{H^{N_mon}}
  double besov_w = 0.0; // ||e^{-it Lambda} g+||_{B^0_{inf,1}}
  // Time-weighted bootstrap components:
  //   t^-delta ||f||_{H^{N_mon+1}},  t^-delta ||x f||,  t^{-1+2 alpha+delta} ||x^2 f||,
  //   ||g+||_{H^{N_mon}},  t ||e^{-it Lambda} g+||_{B^0_{inf,1}}
  std::array<double, 5> xnorm{};
  // Weighted bounds on the wave Duhamel term G+:
  //   t^{1/4-3gamma/4+2alpha+3delta} ||e^{-it Lambda} x Lambda G+||_{L^{4/(1+gamma)}},
  //   t^{2alpha+3delta} ||e^{-it Lambda} Lambda^{-1} G+||_{L^3},  ||Lambda^{1/2} x G+||_{L^2}
  std::array<double, 3> apriori_g{};
  double cauchy_f = 0.0;  // ||f(t) - f(t_prev)||_{L^2}

  static const std::vector<std::string>& column_names();
  std::vector<double> columns() const;
  static DiagnosticsRecord from_columns(const std::vector<double>& values);
};

struct Conserved {
  double mass = 0.0;
  double energy = 0.0;
};

/// mass = ||u||^2 and
/// H = int |grad u|^2 + n |u|^2 + 1/2 (Lambda^{-(1+gamma)/2} n_t)^2 + 1/2 (Lambda^{(1-gamma)/2} n)^2.
Conserved conserved_quantities(const Evolution& evolution, const State& state);

/// Computes DiagnosticsRecords. Rate weights use max(t, 1).
class Monitor {
 public:
  Monitor(const Grid& grid, const Params& params);

  DiagnosticsRecord record(const Evolution& evolution, const State& state,
                           const Field* previous_fhat = nullptr) const;

  /// ||Lambda^{1/2} x G||_{L^2} for an arbitrary wave Duhamel term (frequency).
  double lambda_half_x_norm(const Field& g_hat) const;

  const DyadicPartition& partition() const { return partition_; }
  const Params& params() const { return params_; }

 private:
  Grid grid_;
  Params params_;
  DyadicPartition partition_;
};

struct DecayFit {
  double slope = 0.0;
  double stderr = 0.0;
  double intercept = 0.0;
  std::size_t samples = 0;
};

/// Least-squares slope of log(value) against log(t) over t0 <= t <= t1.
DecayFit fit_decay(const std::vector<std::pair<double, double>>& series, double t0, double t1);

struct ScatteringReport {
  std::vector<double> times;
  std::vector<double> f_increments;  // ||f(t_j) - f(t_{j-1})||_{L^2}
  std::vector<double> g_increments;
  bool cauchy_consistent = false;    // non-increasing over the last five snapshots
  std::string to_text() const;
};

class ScatteringMonitor {
 public:
  void observe(const State& state);
  std::size_t snapshots() const { return snapshots_; }
  ScatteringReport report() const;

 private:
  std::optional<Field> last_f_;
  std::optional<Field> last_g_;
  std::size_t snapshots_ = 0;
  ScatteringReport acc_;
};

enum class DispersiveKind { SchrodingerL6, SchrodingerLinf, WaveBesov };
const char* to_string(DispersiveKind kind);

struct DispersiveWindow {
  double t0 = 1.0;
  double t1 = 10.0;
  int samples = 16;
  /// Overrides the wrap-around guard; by default the Schrodinger kinds use
  /// schrodinger_wrap_time(grid, effective_wavenumber(data)) and the wave
  /// kind uses L/2.
  std::optional<double> wrap_time;
  double band = 2.0;
};

struct DispersiveReport {
  DispersiveKind kind{};
  std::vector<double> times;
  std::vector<double> norms;   // left-hand side
  std::vector<double> ratios;  // norm * t^rate / right-hand side
  double max_over_median = 0.0;
  DecayFit fit;
  double wrap_time = 0.0;
  bool pass = false;
  std::string to_text() const;
};

/// Measures a linear dispersive estimate along log-spaced times in the window.
/// `data` is the Schrodinger profile f or the wave datum h.
DispersiveReport dispersive_estimate_check(DispersiveKind kind, const Field& data,
                                           const DispersiveWindow& window);

}  // namespace zk
