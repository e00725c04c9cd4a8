#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zk/config.hpp"
#include "zk/data_factory.hpp"
#include "zk/evolution.hpp"

namespace zk {

/// Initial data for a configuration, with the amplitude resolved (an "auto"
/// amplitude becomes the certified amplitude at the configured margin).
struct PreparedData {
  DataSpec spec;
  InitialData data;
  CertReport certificate;
};
PreparedData prepare_data(const RunConfig& config);

struct OracleCheckResult {
  std::vector<double> times;
  std::vector<double> error_g;       // relative L^2 error of the wave accumulator
  std::vector<double> error_fplus;   // ... of the "+" Schrodinger accumulator
  std::vector<double> error_fminus;  // ... of the "-" Schrodinger accumulator
  double max_error = 0.0;
  bool pass = false;
  std::string to_text() const;
};

/// Evolves random band-limited data on a small 2-d grid and compares the
/// evolution's Duhamel accumulators with direct quadrature of the Duhamel
/// integrals at several times in (0, t_end].
OracleCheckResult oracle_check(const RunConfig& config);

struct RunOutcome {
  RunSummary summary;
  std::size_t rows = 0;
  std::vector<std::string> checkpoints;
};

/// Runs (or, given a checkpoint, resumes) an evolution, writing the time
/// series, checkpoints and a summary into config.output.
RunOutcome run_pipeline(const RunConfig& config, bool quiet,
                        const std::optional<std::string>& resume_from = std::nullopt);

/// Entry point of the zkg command-line tool. Returns the process exit code:
/// 0 success, 1 configuration error, 2 numerical failure, 3 I/O error.
int cli_main(int argc, char** argv);

}  // namespace zk
