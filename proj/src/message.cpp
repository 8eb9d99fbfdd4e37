#include "qsdc/message.hpp"

#include <stdexcept>

namespace qsdc {

int message_space_size(int num_senders) {
  if (num_senders < 2) throw std::invalid_argument("need at least 2 senders");
  return 4 << (num_senders - 1);
}

MessageTuple message_from_index(int index, int num_senders) {
  if (index < 0 || index >= message_space_size(num_senders)) {
    throw std::invalid_argument("message index out of range");
  }
  MessageTuple m;
  m.other_bits.resize(num_senders - 1);
  for (int k = num_senders - 2; k >= 0; --k) {
    m.other_bits[k] = index & 1;
    index >>= 1;
  }
  m.sender1_bits = static_cast<std::uint8_t>(index);
  return m;
}

int message_to_index(const MessageTuple& m) {
  int index = m.sender1_bits;
  for (std::uint8_t b : m.other_bits) index = (index << 1) | b;
  return index;
}

std::string message_token(const MessageTuple& m) {
  std::string s;
  s += ('0' + ((m.sender1_bits >> 1) & 1));
  s += ('0' + (m.sender1_bits & 1));
  for (std::uint8_t b : m.other_bits) {
    s += ',';
    s += ('0' + b);
  }
  return s;
}

MessageTuple parse_message_token(std::string_view token) {
  MessageTuple m;
  std::size_t pos = 0;
  auto next_field = [&]() -> std::string_view {
    std::size_t comma = token.find(',', pos);
    std::string_view f = token.substr(pos, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - pos);
    pos = comma == std::string_view::npos ? token.size() : comma + 1;
    return f;
  };
  std::string_view first = next_field();
  if (first.size() != 2 || (first[0] != '0' && first[0] != '1') ||
      (first[1] != '0' && first[1] != '1')) {
    throw std::invalid_argument("bad message token: " + std::string(token));
  }
  m.sender1_bits = static_cast<std::uint8_t>(((first[0] - '0') << 1) | (first[1] - '0'));
  while (pos < token.size()) {
    std::string_view f = next_field();
    if (f.size() != 1 || (f[0] != '0' && f[0] != '1')) {
      throw std::invalid_argument("bad message token: " + std::string(token));
    }
    m.other_bits.push_back(static_cast<std::uint8_t>(f[0] - '0'));
  }
  if (m.other_bits.empty()) {
    throw std::invalid_argument("message must carry at least two senders");
  }
  return m;
}

std::vector<PauliLabel> encode_bits_to_ops(const MessageTuple& m) {
  static constexpr PauliLabel kSender1Map[4] = {PauliLabel::I, PauliLabel::X,
                                                PauliLabel::Yp, PauliLabel::Z};
  std::vector<PauliLabel> ops;
  ops.reserve(m.num_senders());
  ops.push_back(kSender1Map[m.sender1_bits & 3]);
  for (std::uint8_t b : m.other_bits) ops.push_back(b ? PauliLabel::X : PauliLabel::I);
  return ops;
}

MessageTuple ops_to_bits(const std::vector<PauliLabel>& ops) {
  if (ops.size() < 2) throw std::invalid_argument("operation tuple needs >= 2 entries");
  MessageTuple m;
  switch (ops[0]) {
    case PauliLabel::I:
      m.sender1_bits = 0;
      break;
    case PauliLabel::X:
      m.sender1_bits = 1;
      break;
    case PauliLabel::Yp:
      m.sender1_bits = 2;
      break;
    case PauliLabel::Z:
      m.sender1_bits = 3;
      break;
  }
  for (std::size_t k = 1; k < ops.size(); ++k) {
    if (ops[k] != PauliLabel::I && ops[k] != PauliLabel::X) {
      throw std::invalid_argument("senders 2..M may only apply I or X");
    }
    m.other_bits.push_back(ops[k] == PauliLabel::X ? 1 : 0);
  }
  return m;
}

std::string ops_token(const std::vector<PauliLabel>& ops) {
  std::string s;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (k) s += ',';
    s += pauli_token(ops[k]);
  }
  return s;
}

std::vector<PauliLabel> parse_ops_token(std::string_view token) {
  std::vector<PauliLabel> ops;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t comma = token.find(',', pos);
    std::string_view f = token.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    ops.push_back(parse_pauli_token(f));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ops;
}

BellOutcome apply_op_to_outcome(PauliLabel op, BellOutcome o) {
  switch (op) {
    case PauliLabel::I:
      return o;
    case PauliLabel::X:
      return o.flipped_type();
    case PauliLabel::Z:
      return o.flipped_sign();
    case PauliLabel::Yp:
      return o.flipped_type().flipped_sign();
  }
  throw std::invalid_argument("unknown PauliLabel");
}

}  // namespace qsdc
