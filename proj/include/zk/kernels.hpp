#pragma once

#include <cstdint>
#include <span>

#include "zk/field.hpp"

// Pointwise and reduction kernels behind every field operation. The
// `parallel` versions are OpenMP loops used by the library; the `serial`
// versions are straightforward reference loops kept for tests and
// benchmarks. Parallel reductions accumulate over a fixed block layout, so
// their results do not depend on the thread count.

namespace zk::kernels {

namespace serial {

void scale(std::span<cplx> v, std::span<const double> symbol);
void scale(std::span<cplx> v, std::span<const cplx> symbol);
void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y);
/// v_j *= exp(i t freq_j)
void rotate(std::span<cplx> v, std::span<const double> freq, double t);
/// v_j *= exp(i t shell_freq[shell_j]); equal to rotate() with
/// freq_j = shell_freq[shell_j], but evaluates one exponential per shell.
void rotate_shells(std::span<cplx> v, std::span<const std::uint32_t> shell,
                   std::span<const double> shell_freq, double t);
double sum_abs_pow(std::span<const cplx> v, double p);
double max_abs(std::span<const cplx> v);
/// sum_j w_j |v_j|^2
double weighted_sum_sq(std::span<const cplx> v, std::span<const double> w);

}  // namespace serial

namespace parallel {

void scale(std::span<cplx> v, std::span<const double> symbol);
void scale(std::span<cplx> v, std::span<const cplx> symbol);
void multiply(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out);
void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y);
void rotate(std::span<cplx> v, std::span<const double> freq, double t);
void rotate_shells(std::span<cplx> v, std::span<const std::uint32_t> shell,
                   std::span<const double> shell_freq, double t);
double sum_abs_pow(std::span<const cplx> v, double p);
double max_abs(std::span<const cplx> v);
double weighted_sum_sq(std::span<const cplx> v, std::span<const double> w);

}  // namespace parallel

}  // namespace zk::kernels
