#include <benchmark/benchmark.h>

#include <optional>
#include <random>

#include "zk/evolution.hpp"
#include "zk/fft.hpp"
#include "zk/grid.hpp"
#include "zk/kernels.hpp"

// Serial reference kernels against their OpenMP counterparts, plus the
// transforms and a full nonlinear step. The argument is the lattice size
// per axis of a 3-d grid.

namespace {

using zk::cplx;

zk::Buffer random_buffer(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  zk::Buffer b(n);
  for (auto& v : b) v = cplx(normal(rng), normal(rng));
  return b;
}

const zk::Lattice& lattice(benchmark::State& state) {
  static std::optional<zk::Grid> grid;
  const int n = static_cast<int>(state.range(0));
  if (!grid || grid->n() != n) grid.emplace(3, n, 2.0 * n);
  return zk::lattice_for(*grid);
}

template <bool Parallel>
void BM_Rotate(benchmark::State& state) {
  const zk::Lattice& lat = lattice(state);
  zk::Buffer v = random_buffer(lat.k2.size(), 1);
  for (auto _ : state) {
    if constexpr (Parallel)
      zk::kernels::parallel::rotate(v, lat.k2, 0.1);
    else
      zk::kernels::serial::rotate(v, lat.k2, 0.1);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}

template <bool Parallel>
void BM_RotateShells(benchmark::State& state) {
  const zk::Lattice& lat = lattice(state);
  zk::Buffer v = random_buffer(lat.k2.size(), 1);
  for (auto _ : state) {
    if constexpr (Parallel)
      zk::kernels::parallel::rotate_shells(v, lat.shell, lat.shell_k2, 0.1);
    else
      zk::kernels::serial::rotate_shells(v, lat.shell, lat.shell_k2, 0.1);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(v.size()));
}

template <bool Parallel>
void BM_Multiply(benchmark::State& state) {
  const std::size_t n = lattice(state).k2.size();
  zk::Buffer a = random_buffer(n, 1), b = random_buffer(n, 2), out(n);
  for (auto _ : state) {
    if constexpr (Parallel)
      zk::kernels::parallel::multiply(a, b, out);
    else
      zk::kernels::serial::multiply(a, b, out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

template <bool Parallel>
void BM_SumAbsPow(benchmark::State& state) {
  const std::size_t n = lattice(state).k2.size();
  zk::Buffer a = random_buffer(n, 3);
  for (auto _ : state) {
    double s = Parallel ? zk::kernels::parallel::sum_abs_pow(a, 3.0) : zk::kernels::serial::sum_abs_pow(a, 3.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

template <bool Parallel>
void BM_WeightedSumSq(benchmark::State& state) {
  const zk::Lattice& lat = lattice(state);
  zk::Buffer a = random_buffer(lat.k2.size(), 4);
  for (auto _ : state) {
    double s = Parallel ? zk::kernels::parallel::weighted_sum_sq(a, lat.k2)
                        : zk::kernels::serial::weighted_sum_sq(a, lat.k2);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(a.size()));
}

void BM_FftRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  zk::Grid grid(3, n, 2.0 * n);
  zk::Buffer a = random_buffer(grid.size(), 5), b(grid.size());
  for (auto _ : state) {
    zk::fft::forward(grid, a, b);
    zk::fft::inverse(grid, b, a);
    benchmark::ClobberMemory();
  }
}

void BM_NonlinearStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  zk::Grid grid(3, n, 2.0 * n);
  zk::Evolution evolution(grid, 1.0);
  zk::State s(grid);
  zk::Buffer f = random_buffer(grid.size(), 6);
  for (std::size_t i = 0; i < grid.size(); ++i) s.fhat[i] = 1e-6 * f[i];
  for (auto _ : state) {
    s = evolution.step(s, 1e-3);
    benchmark::DoNotOptimize(s.fhat[0]);
  }
}

#define ZK_PAIR(fn)                                                              \
  BENCHMARK(fn<false>)->Name(#fn "/serial")->Arg(32)->Arg(64);                   \
  BENCHMARK(fn<true>)->Name(#fn "/parallel")->Arg(32)->Arg(64)

ZK_PAIR(BM_Rotate);
ZK_PAIR(BM_RotateShells);
ZK_PAIR(BM_Multiply);
ZK_PAIR(BM_SumAbsPow);
ZK_PAIR(BM_WeightedSumSq);
BENCHMARK(BM_FftRoundTrip)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NonlinearStep)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
