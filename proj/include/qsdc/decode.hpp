#pragma once

#include <stdexcept>
#include <vector>

#include "qsdc/bell.hpp"
#include "qsdc/message.hpp"

namespace qsdc {

/// The announced outcomes are not explainable by any allowed operation tuple.
/// On honest noiseless transcripts this never happens; under corruption or
/// attack the protocol layer decides the policy.
struct DecodeInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Receiver-side list of the sender-pair outcome tuples that can accompany
/// `receiver_outcome` before any encoding: same type as the receiver outcome,
/// total sign parity (senders plus receiver) even.
struct CandidateSet {
  BellOutcome receiver_outcome;
  std::vector<BellTuple> candidates;  // 2^(M-1) tuples, ascending code order

  bool contains(const BellTuple& t) const;
};

CandidateSet candidate_set(BellOutcome receiver_outcome, int num_senders);

/// Exhaustive decoder: tries all 4 * 2^(M-1) allowed operation tuples
/// against every candidate and returns the unique match, as message bits.
/// Throws DecodeInconsistency on zero matches and std::logic_error if more
/// than one operation tuple fits (impossible for honest transcripts).
MessageTuple decode_search(BellOutcome receiver_outcome, const BellTuple& announced,
                           int num_senders);

/// Closed-form decoder: sender k's X bit is the type mismatch between
/// announced[k] and the receiver outcome; sender 1's Z bit is the total sign
/// parity of announced entries plus the receiver outcome. Total function,
/// equal to decode_search everywhere.
MessageTuple decode_analytic(BellOutcome receiver_outcome, const BellTuple& announced,
                             int num_senders);

}  // namespace qsdc
