#pragma once

#include <cstdint>
#include <string>

#include "zk/evolution.hpp"

namespace zk {

inline constexpr std::uint32_t kCheckpointVersion = 1;

struct Checkpoint {
  State state;
  double gamma = 1.0;
};

/// Binary layout (little-endian):
///   "ZKG1" | u32 version | u32 dim | u32 n | f64 L | f64 t | f64 gamma | u64 step_count
///   | fhat | gplus_hat | fplus_hat | fminus_hat | gacc_hat
/// each array as interleaved (re, im) f64 pairs in row-major lattice order.
void write_checkpoint(const State& state, double gamma, const std::string& path);

/// Throws IoError when the file cannot be read and ContractError on a
/// version or shape mismatch (the message names expected and found values).
Checkpoint read_checkpoint(const std::string& path);

}  // namespace zk
