#include "qsdc/round.hpp"

#include <stdexcept>

#include "qsdc/measure.hpp"

namespace qsdc {

RoundTranscript run_group(GroupRegister& group, const MessageTuple& message,
                          RngStream& rng) {
  const int m = group.num_senders;
  if (message.num_senders() != m) {
    throw std::invalid_argument("message shape does not match the group's sender count");
  }
  if (group.consumed) {
    throw std::logic_error("group was sacrificed to verification and cannot carry a message");
  }
  if (std::abs(group.state.norm_sq() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("group state is not normalized");
  }

  RoundTranscript t;
  t.group_id = group.group_id;
  t.num_senders = m;
  t.message = message;

  // Encoding: each sender applies its operation to its first-register particle.
  t.operations = encode_bits_to_ops(message);
  PureState state = group.state;
  for (int k = 1; k <= m; ++k) {
    state = apply_single_qubit(state, k, t.operations[k - 1]);
  }

  // Senders Bell-measure their pairs and say only that they did.
  ReceiverStateMachine receiver(m);
  t.sender_outcomes.resize(m);
  for (int k = 1; k <= m; ++k) {
    const auto [first, second] = group.pair_of_party(k);
    auto measured = measure_bell(state, first, second, rng);
    t.sender_outcomes[k - 1] = measured.outcome;
    state = std::move(measured.collapsed);
    t.classical_log.push_back(ClassicalMessage::measurement_done(k, t.group_id));
    receiver.on_measurement_done(k);
  }

  // The receiver measures its own pair and lists the candidates.
  const auto [rfirst, rsecond] = group.pair_of_party(kReceiverParty);
  auto own = measure_bell(state, rfirst, rsecond, rng);
  t.receiver_outcome = own.outcome;
  state = std::move(own.collapsed);
  receiver.on_own_measurement();
  t.candidates = candidate_set(t.receiver_outcome, m);

  // Outcomes become public only after the request.
  receiver.request_results();
  t.classical_log.push_back(ClassicalMessage::results_request(t.group_id));
  for (int k = 1; k <= m; ++k) {
    t.classical_log.push_back(
        ClassicalMessage::results_announcement(k, t.group_id, t.sender_outcomes[k - 1]));
    receiver.on_announcement(k);
  }
  if (!receiver.all_announced() || leaks_before_request(t.classical_log)) {
    throw std::logic_error("classical exchange violated the ordering contract");
  }

  // Closed-form decode, audited by the exhaustive search.
  try {
    MessageTuple analytic = decode_analytic(t.receiver_outcome, t.sender_outcomes, m);
    MessageTuple searched = decode_search(t.receiver_outcome, t.sender_outcomes, m);
    if (analytic != searched) {
      throw DecodeInconsistency("analytic and search decoders disagree");
    }
    t.decoded = std::move(analytic);
  } catch (const DecodeInconsistency&) {
    t.decoded.reset();  // flagged, not fatal to the batch
  }

  group.state = std::move(state);
  group.consumed = true;
  return t;
}

namespace {

std::vector<std::uint8_t> certain_bits_of(const MessageTuple& m, int sender) {
  if (sender == 1) {
    return {static_cast<std::uint8_t>((m.sender1_bits >> 1) & 1),
            static_cast<std::uint8_t>(m.sender1_bits & 1)};
  }
  return {m.other_bits[sender - 2]};
}

std::vector<SharedKeyRecord> build_records(const RoundTranscript& t,
                                           const MessageTuple& bits) {
  std::vector<SharedKeyRecord> records;
  records.reserve(t.num_senders);
  for (int k = 1; k <= t.num_senders; ++k) {
    const BellOutcome o = t.sender_outcomes[k - 1];
    records.push_back(SharedKeyRecord{k, certain_bits_of(bits, k), {o.type_bit, o.sign_bit}});
  }
  return records;
}

}  // namespace

std::vector<SharedKeyRecord> extract_shared_keys(const RoundTranscript& t) {
  if (t.decode_failed()) return {};
  return build_records(t, *t.decoded);
}

std::vector<SharedKeyRecord> extract_shared_keys_sender_view(const RoundTranscript& t) {
  return build_records(t, t.message);
}

}  // namespace qsdc
