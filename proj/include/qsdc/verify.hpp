#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsdc/group.hpp"
#include "qsdc/rng.hpp"

namespace qsdc {

enum class VerifyMode : std::uint8_t {
  Expectation,  // idealized: all M+1 stabilizer expectations per half
  Sampled,      // operational: one projectively measured stabilizer per half
};

VerifyMode parse_verify_mode(const std::string& token);
std::string verify_mode_token(VerifyMode mode);

struct StabilizerCheck {
  std::int64_t group_id = 0;
  int half = 0;             // 1 or 2
  int stabilizer_index = 0; // 1..M+1
  double eigenvalue = 0;    // expectation, or the sampled +-1
};

struct VerificationReport {
  std::int64_t groups_tested = 0;
  VerifyMode mode = VerifyMode::Expectation;
  std::vector<StabilizerCheck> checks;
  std::vector<StabilizerCheck> failure_positions;  // checks with eigenvalue != +1
  bool passed = true;
};

/// Channel test over a sample of groups. Expectation mode passes iff every
/// stabilizer expectation on both GHZ halves is +1 within 1e-9; sampled mode
/// measures one uniformly chosen stabilizer per half and passes iff every
/// result is +1. Tested groups are marked consumed either way.
VerificationReport verify_channel(std::span<GroupRegister> groups, VerifyMode mode,
                                  RngStream& rng);

}  // namespace qsdc
