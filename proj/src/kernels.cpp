#include "zk/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace zk::kernels {

namespace {

double abs_pow(const cplx& z, double p) {
  if (p == 2.0) return std::norm(z);
  double a = std::abs(z);
  if (p == 1.0) return a;
  return std::pow(a, p);
}

constexpr std::size_t kBlocks = 256;

template <typename Partial>
double blocked_sum(std::size_t n, Partial&& partial) {
  std::array<double, kBlocks> sums{};
  const auto blocks = static_cast<long>(kBlocks);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    std::size_t lo = n * b / kBlocks;
    std::size_t hi = n * (b + 1) / kBlocks;
    sums[b] = partial(lo, hi);
  }
  double total = 0.0;
  for (double s : sums) total += s;
  return total;
}

}  // namespace

namespace serial {

void scale(std::span<cplx> v, std::span<const double> symbol) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= symbol[i];
}

void scale(std::span<cplx> v, std::span<const cplx> symbol) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= symbol[i];
}

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void rotate(std::span<cplx> v, std::span<const double> freq, double t) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::polar(1.0, t * freq[i]);
}

void rotate_shells(std::span<cplx> v, std::span<const std::uint32_t> shell,
                   std::span<const double> shell_freq, double t) {
  std::vector<cplx> table(shell_freq.size());
  for (std::size_t m = 0; m < table.size(); ++m) table[m] = std::polar(1.0, t * shell_freq[m]);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= table[shell[i]];
}

double sum_abs_pow(std::span<const cplx> v, double p) {
  double s = 0.0;
  for (const auto& z : v) s += abs_pow(z, p);
  return s;
}

double max_abs(std::span<const cplx> v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

double weighted_sum_sq(std::span<const cplx> v, std::span<const double> w) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * std::norm(v[i]);
  return s;
}

}  // namespace serial

namespace parallel {

void scale(std::span<cplx> v, std::span<const double> symbol) {
  const auto n = static_cast<long>(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) v[i] *= symbol[i];
}

void scale(std::span<cplx> v, std::span<const cplx> symbol) {
  const auto n = static_cast<long>(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) v[i] *= symbol[i];
}

void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out) {
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  const auto n = static_cast<long>(y.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) y[i] += a * x[i];
}

void rotate(std::span<cplx> v, std::span<const double> freq, double t) {
  const auto n = static_cast<long>(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) v[i] *= std::polar(1.0, t * freq[i]);
}

void rotate_shells(std::span<cplx> v, std::span<const std::uint32_t> shell,
                   std::span<const double> shell_freq, double t) {
  std::vector<cplx> table(shell_freq.size());
  const auto shells = static_cast<long>(table.size());
#pragma omp parallel for schedule(static)
  for (long m = 0; m < shells; ++m) table[m] = std::polar(1.0, t * shell_freq[m]);
  const auto n = static_cast<long>(v.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) v[i] *= table[shell[i]];
}

double sum_abs_pow(std::span<const cplx> v, double p) {
  return blocked_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += abs_pow(v[i], p);
    return s;
  });
}

double max_abs(std::span<const cplx> v) {
  std::array<double, kBlocks> maxima{};
  const std::size_t n = v.size();
  const auto blocks = static_cast<long>(kBlocks);
#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    double m = 0.0;
    for (std::size_t i = n * b / kBlocks; i < n * (b + 1) / kBlocks; ++i)
      m = std::max(m, std::abs(v[i]));
    maxima[b] = m;
  }
  return *std::max_element(maxima.begin(), maxima.end());
}

double weighted_sum_sq(std::span<const cplx> v, std::span<const double> w) {
  return blocked_sum(v.size(), [&](std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += w[i] * std::norm(v[i]);
    return s;
  });
}

}  // namespace parallel

}  // namespace zk::kernels
