#include "qsdc/sweep.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

#include "qsdc/adversary.hpp"

namespace qsdc {

void SweepConfig::validate() const {
  if (num_senders < kMinSenders || num_senders > kMaxSenders) {
    throw std::invalid_argument("sender count must be in 2..6");
  }
  if (groups_per_point < 1) throw std::invalid_argument("need at least one group per point");
  if (points.empty()) throw std::invalid_argument("sweep needs at least one point");
  for (double s : points) {
    if (s < 0 || s > 1) throw std::invalid_argument("sweep points must lie in [0,1]");
  }
  base_noise.scaled(1.0).validate();
}

SweepSummary detection_statistics(const SweepConfig& config, std::uint64_t master_seed) {
  config.validate();
  SweepSummary summary;
  const PureState half = make_ghz(config.num_senders + 1);
  const PureState clean = tensor(half, half);

  for (std::size_t p = 0; p < config.points.size(); ++p) {
    const double strength = config.points[p];
    const NoiseModel noise = config.base_noise.scaled(strength);
    SweepPoint point;
    point.strength = strength;
    point.groups = config.groups_per_point;

    for (std::int64_t g = 0; g < config.groups_per_point; ++g) {
      const std::uint64_t trial = static_cast<std::uint64_t>(p) * 1000003ULL +
                                  static_cast<std::uint64_t>(g);
      RngStream rng = derive_stream(master_seed, "sweep-trial", trial);
      GroupRegister group{g, config.num_senders, clean, false};
      if (!noise.is_identity()) {
        group = apply_noise(std::move(group), noise, rng, config.noise_targets);
      }
      if (!config.eavesdrop_targets.empty()) {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        if (dist(rng) < strength) {
          group = intercept_resend(std::move(group), config.eavesdrop_targets, rng);
        }
      }
      const VerificationReport report =
          verify_channel(std::span<GroupRegister>(&group, 1), config.mode, rng);
      if (!report.passed) ++point.detected;
    }

    point.rate = static_cast<double>(point.detected) / static_cast<double>(point.groups);
    point.standard_error =
        std::sqrt(point.rate * (1.0 - point.rate) / static_cast<double>(point.groups));
    summary.points.push_back(point);
  }
  return summary;
}

}  // namespace qsdc
