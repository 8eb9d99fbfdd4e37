#include "qsdc/decode.hpp"

#include <algorithm>
#include <optional>

namespace qsdc {

bool CandidateSet::contains(const BellTuple& t) const {
  return std::find(candidates.begin(), candidates.end(), t) != candidates.end();
}

CandidateSet candidate_set(BellOutcome receiver_outcome, int num_senders) {
  if (num_senders < 2) throw std::invalid_argument("need at least 2 senders");
  CandidateSet cs{receiver_outcome, {}};
  const int m = num_senders;
  cs.candidates.reserve(std::size_t{1} << (m - 1));
  for (int signs = 0; signs < (1 << m); ++signs) {
    int parity = receiver_outcome.sign_bit;
    for (int k = 0; k < m; ++k) parity ^= (signs >> (m - 1 - k)) & 1;
    if (parity != 0) continue;
    BellTuple t(m);
    for (int k = 0; k < m; ++k) {
      t[k] = BellOutcome{receiver_outcome.type_bit,
                         static_cast<std::uint8_t>((signs >> (m - 1 - k)) & 1)};
    }
    cs.candidates.push_back(std::move(t));
  }
  return cs;
}

namespace {

void check_announced(const BellTuple& announced, int num_senders) {
  if (num_senders < 2) throw std::invalid_argument("need at least 2 senders");
  if (static_cast<int>(announced.size()) != num_senders) {
    throw std::invalid_argument("announced tuple length must equal the sender count");
  }
}

}  // namespace

MessageTuple decode_search(BellOutcome receiver_outcome, const BellTuple& announced,
                           int num_senders) {
  check_announced(announced, num_senders);
  const CandidateSet cs = candidate_set(receiver_outcome, num_senders);
  static constexpr PauliLabel kSender1Ops[4] = {PauliLabel::I, PauliLabel::X,
                                                PauliLabel::Yp, PauliLabel::Z};

  std::optional<MessageTuple> found;
  const int other_combos = 1 << (num_senders - 1);
  std::vector<PauliLabel> ops(num_senders);
  BellTuple mapped(num_senders);
  for (PauliLabel op1 : kSender1Ops) {
    ops[0] = op1;
    for (int rest = 0; rest < other_combos; ++rest) {
      for (int k = 1; k < num_senders; ++k) {
        ops[k] = ((rest >> (num_senders - 1 - k)) & 1) ? PauliLabel::X : PauliLabel::I;
      }
      for (const BellTuple& candidate : cs.candidates) {
        for (int k = 0; k < num_senders; ++k) {
          mapped[k] = apply_op_to_outcome(ops[k], candidate[k]);
        }
        if (mapped != announced) continue;
        MessageTuple decoded = ops_to_bits(ops);
        if (found && *found != decoded) {
          throw std::logic_error("decode_search found two distinct operation tuples");
        }
        found = std::move(decoded);
      }
    }
  }
  if (!found) {
    throw DecodeInconsistency("no operation tuple maps a candidate to the announced outcomes");
  }
  return *found;
}

MessageTuple decode_analytic(BellOutcome receiver_outcome, const BellTuple& announced,
                             int num_senders) {
  check_announced(announced, num_senders);
  int sign_parity = receiver_outcome.sign_bit;
  for (const BellOutcome& o : announced) sign_parity ^= o.sign_bit;

  MessageTuple m;
  const int x1 = announced[0].type_bit ^ receiver_outcome.type_bit;
  const int z1 = sign_parity;
  // sigma_10 = i*sigma_y = Z*X carries both flips and sigma_11 = Z carries the
  // sign flip alone, so b1 = z and b1' = x ^ z.
  m.sender1_bits = static_cast<std::uint8_t>((z1 << 1) | (x1 ^ z1));
  m.other_bits.resize(num_senders - 1);
  for (int k = 1; k < num_senders; ++k) {
    m.other_bits[k - 1] =
        static_cast<std::uint8_t>(announced[k].type_bit ^ receiver_outcome.type_bit);
  }
  return m;
}

}  // namespace qsdc
