#pragma once

#include <cstdint>
#include <vector>

#include "qsdc/noise.hpp"
#include "qsdc/verify.hpp"

namespace qsdc {

/// Experiment driver configuration: each point scales the noise probabilities
/// and, when eavesdrop targets are set, gives the fraction of groups attacked.
struct SweepConfig {
  int num_senders = 3;
  std::int64_t groups_per_point = 200;
  std::vector<double> points = {0.0, 0.25, 0.5, 0.75, 1.0};
  NoiseModel base_noise;
  std::vector<int> noise_targets;      // empty = every particle
  std::vector<int> eavesdrop_targets;  // empty = no eavesdropper
  VerifyMode mode = VerifyMode::Expectation;

  void validate() const;
};

struct SweepPoint {
  double strength = 0;
  std::int64_t groups = 0;
  std::int64_t detected = 0;
  double rate = 0;
  double standard_error = 0;
};

struct SweepSummary {
  std::vector<SweepPoint> points;
};

/// Per-point detection rate of the channel test, one verification per group.
/// Deterministic for a fixed master seed.
SweepSummary detection_statistics(const SweepConfig& config, std::uint64_t master_seed);

}  // namespace qsdc
