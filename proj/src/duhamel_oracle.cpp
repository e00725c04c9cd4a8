#include "zk/duhamel_oracle.hpp"

#include <cmath>
#include <sstream>

#include "zk/error.hpp"
#include "zk/phases.hpp"

namespace zk {

namespace {

struct BandModes {
  std::vector<Index3> modes;  // signed modes inside the 2/3 band
};

BandModes band_modes(const Grid& g) {
  const int cut = (g.n() - 1) / 3;
  BandModes band;
  const int lo1 = g.dim() > 1 ? -cut : 0, hi1 = g.dim() > 1 ? cut : 0;
  const int lo2 = g.dim() > 2 ? -cut : 0, hi2 = g.dim() > 2 ? cut : 0;
  for (int a = -cut; a <= cut; ++a)
    for (int b = lo1; b <= hi1; ++b)
      for (int c = lo2; c <= hi2; ++c) band.modes.push_back({a, b, c});
  return band;
}

bool in_band(const Index3& m, int cut) {
  return std::abs(m[0]) <= cut && std::abs(m[1]) <= cut && std::abs(m[2]) <= cut;
}

std::size_t slot(const Grid& g, const Index3& m) {
  Index3 idx{0, 0, 0};
  for (int d = 0; d < g.dim(); ++d) idx[d] = g.mode_slot(m[d]);
  return g.ravel(idx);
}

Vec3 wavevector(const Grid& g, const Index3& m) {
  return {g.dk() * m[0], g.dk() * m[1], g.dk() * m[2]};
}

std::size_t node_count(const ProfileHistory& h, double t) {
  if (h.fhat.empty()) throw ContractError("duhamel oracle: empty history");
  if (t == 0.0) return 0;
  if (!(h.ds > 0.0)) throw ContractError("duhamel oracle: history spacing must be positive");
  double steps = t / h.ds;
  auto k = static_cast<std::size_t>(std::llround(steps));
  if (std::abs(steps - static_cast<double>(k)) > 1e-9 * std::max(1.0, steps)) {
    std::ostringstream msg;
    msg << "duhamel oracle: t = " << t << " is not a multiple of the history stride " << h.ds;
    throw ContractError(msg.str());
  }
  if (k % 2 != 0) throw ContractError("duhamel oracle: Simpson's rule needs an even number of intervals");
  if (k >= h.fhat.size()) throw ContractError("duhamel oracle: history too short for requested t");
  return k;
}

double simpson_weight(std::size_t j, std::size_t k) {
  if (j == 0 || j == k) return 1.0 / 3.0;
  return j % 2 == 1 ? 4.0 / 3.0 : 2.0 / 3.0;
}

template <typename Integrand>
Field integrate(const ProfileHistory& h, double t, Integrand&& integrand) {
  const Grid& g = h.fhat.front().grid();
  Field out(g, Space::Frequency);
  std::size_t k = node_count(h, t);
  if (k == 0) return out;
  const BandModes band = band_modes(g);
  const int cut = (g.n() - 1) / 3;
  const double inv_n = 1.0 / static_cast<double>(g.size());
  for (std::size_t j = 0; j <= k; ++j) {
    const double s = h.ds * static_cast<double>(j);
    const double w = simpson_weight(j, k) * h.ds * inv_n;
    for (const Index3& mxi : band.modes) {
      cplx acc{0.0, 0.0};
      for (const Index3& meta : band.modes) {
        Index3 mdiff{mxi[0] - meta[0], mxi[1] - meta[1], mxi[2] - meta[2]};
        if (!in_band(mdiff, cut)) continue;
        acc += integrand(j, s, mxi, meta, mdiff);
      }
      out[slot(g, mxi)] += w * acc;
    }
  }
  return out;
}

}  // namespace

Field duhamel_oracle_G(const ProfileHistory& h, double t, Branch branch, double gamma) {
  const Grid& g = h.fhat.front().grid();
  return integrate(h, t, [&](std::size_t j, double s, const Index3& mxi, const Index3& meta,
                             const Index3& mdiff) {
    Vec3 xi = wavevector(g, mxi), eta = wavevector(g, meta);
    double kxi = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
    if (kxi == 0.0) return cplx{0.0, 0.0};
    const Field& f = h.fhat[j];
    Index3 neg{-meta[0], -meta[1], -meta[2]};
    cplx a = f[slot(g, mdiff)];
    cplx b = std::conj(f[slot(g, neg)]);  // Fourier transform of conj(f) at eta
    return std::pow(kxi, gamma) * std::polar(1.0, s * duhamel_phase_g(xi, eta, branch)) * a * b;
  });
}

Field duhamel_oracle_F(const ProfileHistory& h, double t, Branch branch) {
  const Grid& g = h.fhat.front().grid();
  if (h.gplus_hat.size() != h.fhat.size())
    throw ContractError("duhamel oracle: wave history length differs from Schrodinger history");
  return integrate(h, t, [&](std::size_t j, double s, const Index3& mxi, const Index3& meta,
                             const Index3& mdiff) {
    Vec3 xi = wavevector(g, mxi), eta = wavevector(g, meta);
    const Field& f = h.fhat[j];
    const Field& gp = h.gplus_hat[j];
    cplx a = f[slot(g, mdiff)];
    cplx b;
    if (branch == Branch::Plus) {
      b = gp[slot(g, meta)];
    } else {
      Index3 neg{-meta[0], -meta[1], -meta[2]};
      b = -std::conj(gp[slot(g, neg)]);
    }
    return std::polar(1.0, s * duhamel_phase_f(xi, eta, branch)) * a * b;
  });
}

}  // namespace zk
