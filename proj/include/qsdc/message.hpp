#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/bell.hpp"
#include "qsdc/pauli.hpp"

namespace qsdc {

/// One round's classical payload: two bits from sender 1, one bit from each
/// of the other M-1 senders.
struct MessageTuple {
  std::uint8_t sender1_bits = 0;         // 0..3, written as two bits b1 b1'
  std::vector<std::uint8_t> other_bits;  // one entry per sender 2..M

  int num_senders() const { return static_cast<int>(other_bits.size()) + 1; }

  auto operator<=>(const MessageTuple&) const = default;
};

/// All 4 * 2^(M-1) messages for M senders, indexed so that index 0 is the
/// all-zero message. Used by cyclic message sources and exhaustive sweeps.
int message_space_size(int num_senders);
MessageTuple message_from_index(int index, int num_senders);
int message_to_index(const MessageTuple& m);

std::string message_token(const MessageTuple& m);       // "01,0,1"
MessageTuple parse_message_token(std::string_view token);

/// Sender 1: 00 -> I, 01 -> X, 10 -> i*sigma_y, 11 -> Z.
/// Senders 2..M: 0 -> I, 1 -> X.
std::vector<PauliLabel> encode_bits_to_ops(const MessageTuple& m);
MessageTuple ops_to_bits(const std::vector<PauliLabel>& ops);

std::string ops_token(const std::vector<PauliLabel>& ops);  // "X,I,Z"
std::vector<PauliLabel> parse_ops_token(std::string_view token);

/// How a sender's local operation moves its Bell-pair outcome: X flips the
/// type bit, Z flips the sign bit, i*sigma_y flips both, I neither.
/// (Verified against the dense simulation in the swapping tests.)
BellOutcome apply_op_to_outcome(PauliLabel op, BellOutcome o);

}  // namespace qsdc
