#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsdc/round.hpp"

namespace qsdc {

/// Flat, line-oriented serialization of one round. Records are
/// self-describing: every line repeats the schema tag and the configuration
/// fingerprint, so a transcript survives being split or concatenated.
struct TranscriptRecord {
  int schema_version = 1;
  std::uint64_t config_fingerprint = 0;
  std::int64_t group_id = 0;
  int num_senders = 0;
  MessageTuple message;
  std::vector<PauliLabel> operations;
  BellTuple sender_outcomes;
  BellOutcome receiver_outcome;
  std::vector<BellTuple> candidates;
  std::optional<MessageTuple> decoded;
  std::vector<SharedKeyRecord> keys;  // receiver-side records

  bool operator==(const TranscriptRecord&) const = default;
};

TranscriptRecord make_record(const RoundTranscript& t, std::uint64_t config_fingerprint);

std::string record_to_line(const TranscriptRecord& r);

/// Throws std::invalid_argument with a description on malformed lines.
TranscriptRecord parse_record_line(const std::string& line);

inline bool is_transcript_comment(const std::string& line) {
  return line.empty() || line[0] == '#';
}

}  // namespace qsdc
