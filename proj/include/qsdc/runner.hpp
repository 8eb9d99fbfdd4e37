#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsdc/config.hpp"
#include "qsdc/sweep.hpp"
#include "qsdc/verify.hpp"

namespace qsdc {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitChannelRejected = 3;
constexpr int kExitFailureRate = 4;

struct RunResult {
  int exit_code = kExitOk;
  std::int64_t groups_tested = 0;
  std::int64_t rounds = 0;
  std::int64_t decode_failures = 0;
  double success_rate = 1.0;
  std::optional<bool> verification_passed;  // absent when no test ran
  std::vector<std::pair<std::string, std::string>> summary;  // ordered key/value

  std::string summary_document() const;
};

/// Drives a whole batch per the configured mode and writes the output files:
/// the transcript to out_path, the summary to out_path + ".summary", and in
/// qkd mode the per-sender key strings to out_path + ".keys". Deterministic
/// for a fixed config; no timestamps anywhere.
RunResult run_simulation(const SimulationConfig& config);

}  // namespace qsdc
