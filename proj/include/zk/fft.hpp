#pragma once

#include <span>

#include "zk/field.hpp"

namespace zk::fft {

// Forward transform is the plain DFT  v^_m = sum_j v_j exp(-i k_m . j h);
// the inverse carries the 1/n^dim factor. Norms never see this choice because
// they are all evaluated with physical quadrature weights.

void forward(const Grid& grid, std::span<const cplx> in, std::span<cplx> out);
void inverse(const Grid& grid, std::span<const cplx> in, std::span<cplx> out);

/// Caps the number of threads used by transforms and kernels. Reads
/// ZKG_THREADS when `threads` <= 0.
void configure_threads(int threads = 0);
int thread_count();

}  // namespace zk::fft
