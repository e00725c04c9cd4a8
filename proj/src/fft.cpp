#include "zk/fft.hpp"

#include <fftw3.h>
#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "zk/error.hpp"

namespace zk::fft {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

// FFTW planning is not thread safe; execution of an existing plan on new
// arrays (fftw_execute_dft) is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

int& configured_threads() {
  static int threads = 0;
  return threads;
}

void ensure_threads_initialised() {
  static bool done = [] {
    fftw_init_threads();
    return true;
  }();
  (void)done;
  if (configured_threads() == 0) configure_threads(0);
}

const PlanPair& plans_for(const Grid& grid) {
  static std::map<std::tuple<int, int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(planner_mutex());
  ensure_threads_initialised();
  auto key = std::make_tuple(grid.dim(), grid.n(), configured_threads());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  int dims[3] = {grid.n(), grid.n(), grid.n()};
  Buffer scratch_in(grid.size()), scratch_out(grid.size());
  auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
  auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
  fftw_plan_with_nthreads(configured_threads());
  PlanPair plans;
  plans.forward = fftw_plan_dft(grid.dim(), dims, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  plans.inverse = fftw_plan_dft(grid.dim(), dims, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (plans.forward == nullptr || plans.inverse == nullptr)
    throw ContractError("FFTW planning failed");
  return cache.emplace(key, plans).first->second;
}

void execute(fftw_plan plan, const Grid& grid, std::span<const cplx> in, std::span<cplx> out) {
  if (in.size() != grid.size() || out.size() != grid.size())
    throw ContractError("fft: buffer size does not match grid");
  if (in.data() == out.data()) {
    // In-place requests go through a temporary to keep the plan's
    // out-of-place layout valid.
    Buffer tmp(in.begin(), in.end());
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(tmp.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return;
  }
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void forward(const Grid& grid, std::span<const cplx> in, std::span<cplx> out) {
  execute(plans_for(grid).forward, grid, in, out);
}

void inverse(const Grid& grid, std::span<const cplx> in, std::span<cplx> out) {
  execute(plans_for(grid).inverse, grid, in, out);
  const double norm = 1.0 / static_cast<double>(grid.size());
  const auto n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] *= norm;
}

void configure_threads(int threads) {
  if (threads <= 0) {
    threads = omp_get_max_threads();
    if (const char* env = std::getenv("ZKG_THREADS")) {
      try {
        int cap = std::stoi(env);
        if (cap > 0) threads = std::min(threads, cap);
      } catch (const std::exception&) {
      }
    }
  }
  threads = std::max(threads, 1);
  configured_threads() = threads;
  omp_set_num_threads(threads);
}

int thread_count() {
  if (configured_threads() == 0) configure_threads(0);
  return configured_threads();
}

}  // namespace zk::fft
