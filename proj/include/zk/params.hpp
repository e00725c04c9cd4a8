#pragma once

#include <optional>
#include <string>

namespace zk {

/// Exponents of the decay bootstrap together with the data size.
struct Params {
  double gamma = 1.0;
  double delta = 0.01;
  double alpha = 1.0 / 6.0 - 0.1;
  int n_proof = 500;  // N of the proof, kept for reporting only
  int n_mon = 8;      // Sobolev index actually monitored on the grid
  double eps0 = 1e-2;

  double eps1() const;  // eps0^(2/3)
};

/// Checks 5/N <= delta, 3 delta < alpha <= gamma/2 - 10 delta and
/// alpha <= 1/6 - 10 delta. Returns a description of the first violation.
std::optional<std::string> admissibility_violation(const Params& params);

/// Largest admissible alpha = min(gamma/2, 1/6) - 10 delta for the given
/// delta, N = ceil(5/delta). With no delta, starts at 0.01 and halves until
/// 3 delta < alpha.
Params choose_parameters(double gamma, std::optional<double> delta = std::nullopt,
                         double eps0 = 1e-2, int n_mon = 8);

}  // namespace zk
