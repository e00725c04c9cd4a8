#include "zk/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zk/error.hpp"

namespace zk {

double Params::eps1() const { return std::pow(eps0, 2.0 / 3.0); }

std::optional<std::string> admissibility_violation(const Params& p) {
  std::ostringstream msg;
  if (!(p.gamma > 0.0 && p.gamma <= 1.0)) {
    msg << "gamma = " << p.gamma << " outside (0, 1]";
  } else if (!(p.delta > 0.0)) {
    msg << "delta must be positive";
  } else if (p.n_proof <= 0 || 5.0 / p.n_proof > p.delta * (1.0 + 1e-12)) {
    msg << "5/N = " << 5.0 / p.n_proof << " exceeds delta = " << p.delta;
  } else if (!(3.0 * p.delta < p.alpha)) {
    msg << "3 delta = " << 3.0 * p.delta << " is not below alpha = " << p.alpha;
  } else if (p.alpha > p.gamma / 2.0 - 10.0 * p.delta + 1e-15) {
    msg << "alpha = " << p.alpha << " exceeds gamma/2 - 10 delta = " << p.gamma / 2.0 - 10.0 * p.delta;
  } else if (p.alpha > 1.0 / 6.0 - 10.0 * p.delta + 1e-15) {
    msg << "alpha = " << p.alpha << " exceeds 1/6 - 10 delta = " << 1.0 / 6.0 - 10.0 * p.delta;
  } else if (!(p.eps0 > 0.0)) {
    msg << "eps0 must be positive";
  } else if (p.n_mon < 0) {
    msg << "n_mon must be non-negative";
  } else {
    return std::nullopt;
  }
  return msg.str();
}

namespace {

Params build(double gamma, double delta, double eps0, int n_mon) {
  Params p;
  p.gamma = gamma;
  p.delta = delta;
  p.alpha = std::min(gamma / 2.0, 1.0 / 6.0) - 10.0 * delta;
  // The 1e-9 guard keeps 5/0.01 from rounding up to 501.
  p.n_proof = static_cast<int>(std::ceil(5.0 / delta - 1e-9));
  p.eps0 = eps0;
  p.n_mon = n_mon;
  return p;
}

}  // namespace

Params choose_parameters(double gamma, std::optional<double> delta, double eps0, int n_mon) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    std::ostringstream msg;
    msg << "gamma must lie in (0, 1] (got " << gamma << ")";
    throw ConfigError(msg.str());
  }
  const double ceiling = std::min(gamma / 2.0, 1.0 / 6.0);
  if (delta) {
    Params p = build(gamma, *delta, eps0, n_mon);
    if (auto why = admissibility_violation(p)) {
      std::ostringstream msg;
      msg << "delta = " << *delta << " is not admissible for gamma = " << gamma << " (" << *why
          << "); delta must be below " << ceiling / 13.0;
      throw ConfigError(msg.str());
    }
    return p;
  }
  double d = 0.01;
  for (int i = 0; i < 60; ++i, d *= 0.5) {
    Params p = build(gamma, d, eps0, n_mon);
    if (!admissibility_violation(p)) return p;
  }
  throw ConfigError("no admissible delta found");
}

}  // namespace zk
