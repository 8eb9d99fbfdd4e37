#include "qsdc/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "qsdc/stabilizer.hpp"

namespace qsdc {

namespace {

constexpr double kEigenvalueTolerance = 1e-9;

/// Embeds a stabilizer of one (M+1)-qubit half into the full 2(M+1) register.
StabilizerOperator embed_half(const StabilizerOperator& s, int half, int half_size) {
  StabilizerOperator full{std::vector<StabPauli>(2 * half_size, StabPauli::I)};
  const int offset = (half - 1) * half_size;
  for (int i = 0; i < half_size; ++i) full.pattern[offset + i] = s.pattern[i];
  return full;
}

}  // namespace

VerifyMode parse_verify_mode(const std::string& token) {
  if (token == "expectation") return VerifyMode::Expectation;
  if (token == "sampled") return VerifyMode::Sampled;
  throw std::invalid_argument("verify mode must be 'expectation' or 'sampled'");
}

std::string verify_mode_token(VerifyMode mode) {
  return mode == VerifyMode::Expectation ? "expectation" : "sampled";
}

VerificationReport verify_channel(std::span<GroupRegister> groups, VerifyMode mode,
                                  RngStream& rng) {
  if (groups.empty()) throw std::invalid_argument("verification needs at least one group");

  VerificationReport report;
  report.mode = mode;
  for (GroupRegister& group : groups) {
    const int half_size = group.particles_per_register();
    const auto stabilizers = ghz_stabilizers(half_size);
    for (int half = 1; half <= 2; ++half) {
      if (mode == VerifyMode::Expectation) {
        for (int s = 0; s < half_size; ++s) {
          const double ev =
              stabilizer_expectation(group.state, embed_half(stabilizers[s], half, half_size));
          StabilizerCheck check{group.group_id, half, s + 1, ev};
          report.checks.push_back(check);
          if (std::abs(ev - 1.0) > kEigenvalueTolerance) {
            report.failure_positions.push_back(check);
          }
        }
      } else {
        std::uniform_int_distribution<int> pick(0, half_size - 1);
        const int s = pick(rng);
        auto measured =
            measure_stabilizer(group.state, embed_half(stabilizers[s], half, half_size), rng);
        group.state = std::move(measured.collapsed);
        StabilizerCheck check{group.group_id, half, s + 1,
                              static_cast<double>(measured.eigenvalue)};
        report.checks.push_back(check);
        if (measured.eigenvalue != +1) report.failure_positions.push_back(check);
      }
    }
    group.consumed = true;
    ++report.groups_tested;
  }
  report.passed = report.failure_positions.empty();
  return report;
}

}  // namespace qsdc
