#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qsdc/classical.hpp"
#include "qsdc/decode.hpp"
#include "qsdc/group.hpp"
#include "qsdc/message.hpp"
#include "qsdc/rng.hpp"

namespace qsdc {

/// Key material one sender shares with the receiver after one group:
/// the encoded operation bits (certain) and the two bits of that sender's
/// announced Bell outcome, Phi=0/Psi=1 and +=0/-=1 (random).
struct SharedKeyRecord {
  int sender = 0;
  std::vector<std::uint8_t> certain_bits;  // 2 bits for sender 1, 1 bit otherwise
  std::array<std::uint8_t, 2> random_bits{0, 0};

  bool operator==(const SharedKeyRecord&) const = default;
};

/// Everything observable about one group's message round.
struct RoundTranscript {
  std::int64_t group_id = 0;
  int num_senders = 0;
  MessageTuple message;                 // what the senders meant to say
  std::vector<PauliLabel> operations;   // the encoding they applied
  BellTuple sender_outcomes;            // as announced, in sender order
  BellOutcome receiver_outcome;         // the receiver's own Bell result
  CandidateSet candidates;              // inferred before the announcements
  std::optional<MessageTuple> decoded;  // absent when decoding failed
  std::vector<ClassicalMessage> classical_log;

  bool decode_failed() const { return !decoded.has_value(); }
};

/// Runs one group through encode, Bell measurements, the classical exchange,
/// and decoding. The group is consumed by its measurements.
RoundTranscript run_group(GroupRegister& group, const MessageTuple& message,
                          RngStream& rng);

/// Receiver-side key records, from the decoded bits and the announcements.
std::vector<SharedKeyRecord> extract_shared_keys(const RoundTranscript& t);

/// The same records as each sender computes them, from what it sent and
/// measured. Equal to extract_shared_keys on every successful round.
std::vector<SharedKeyRecord> extract_shared_keys_sender_view(const RoundTranscript& t);

}  // namespace qsdc
