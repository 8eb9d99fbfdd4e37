#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsdc/group.hpp"
#include "qsdc/message.hpp"
#include "qsdc/noise.hpp"
#include "qsdc/verify.hpp"

namespace qsdc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SimMode : std::uint8_t { Qsdc, Qkd, Verify, Sweep };

SimMode parse_sim_mode(const std::string& token);
std::string sim_mode_token(SimMode mode);

/// Who the eavesdropper touches. "party:k" covers both of party k's
/// particles; an optional "@f" suffix attacks only that fraction of groups.
struct EavesdropSpec {
  enum class Target : std::uint8_t { Off, Qubits, Party, All };
  Target target = Target::Off;
  std::vector<int> qubits;
  int party = 0;
  double fraction = 1.0;

  bool active() const { return target != Target::Off; }
  std::vector<int> resolve_targets(int num_senders) const;
  std::string token() const;
};

EavesdropSpec parse_eavesdrop_spec(const std::string& token);

struct MessageSourceSpec {
  enum class Kind : std::uint8_t { Fixed, Cyclic, Random };
  Kind kind = Kind::Cyclic;
  MessageTuple fixed;

  std::string token() const;
};

MessageSourceSpec parse_message_source(const std::string& token);

struct SimulationConfig {
  int parties = 3;            // M
  std::int64_t groups = 1000; // N
  std::uint64_t seed = 1;
  SimMode mode = SimMode::Qsdc;
  NoiseModel noise;
  std::vector<int> noise_targets;  // empty = every particle
  EavesdropSpec eavesdrop;
  double test_fraction = 0.1;
  MessageSourceSpec messages;
  VerifyMode verify_mode = VerifyMode::Expectation;
  double failure_threshold = 0.0;
  std::vector<double> sweep_points = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::string out_path = "qsdc_run.transcript";

  /// Throws ConfigError on the first invalid field.
  void validate() const;

  /// Canonical one-line rendering; its hash is the config fingerprint.
  std::string canonical_string() const;
  std::uint64_t fingerprint() const;
};

std::vector<double> parse_sweep_points(const std::string& token);
NoiseModel parse_noise_spec(const std::string& token);
std::vector<int> parse_index_list(const std::string& token);

}  // namespace qsdc
