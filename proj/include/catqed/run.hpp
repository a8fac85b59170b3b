#pragma once

#include "catqed/config.hpp"

#include <string>
#include <vector>

namespace catqed {

// Exit statuses: 0 = clean, 3 = completed with censored coherence estimates
// (t_max reached before the 1/e crossing), exceptions = failure.
struct RunOutcome {
  int exit_code = 0;
  std::vector<std::string> files; // paths written, in emission order
};

// Execute the configured experiment, writing CSV files under out_dir.
// Outputs are deterministic: fixed grids, ordered reduction, no randomness,
// 12-significant-digit formatting.
RunOutcome run(const RunConfig& cfg, const std::string& out_dir, int threads);

} // namespace catqed
