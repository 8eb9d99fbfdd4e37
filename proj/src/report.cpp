#include "qsdc/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsdc/decode.hpp"
#include "qsdc/transcript.hpp"

namespace qsdc {

namespace {

std::string format_fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

bool in_support(const BellTuple& preimage, BellOutcome receiver) {
  int parity = receiver.sign_bit;
  for (const BellOutcome& o : preimage) {
    if (o.type_bit != receiver.type_bit) return false;
    parity ^= o.sign_bit;
  }
  return parity == 0;
}

}  // namespace

ReportStats report_stats(const std::string& transcript_path) {
  std::ifstream in(transcript_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open transcript: " + transcript_path);

  ReportStats stats;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_transcript_comment(line)) continue;
    TranscriptRecord r;
    try {
      r = parse_record_line(line);
    } catch (const std::invalid_argument& e) {
      ++stats.malformed;
      stats.malformed_lines.emplace_back(line_number, e.what());
      continue;
    }
    ++stats.records;
    if (!r.decoded) ++stats.decode_failures;

    // Replay the decoder over the stored outcomes.
    MessageTuple replayed =
        decode_analytic(r.receiver_outcome, r.sender_outcomes, r.num_senders);
    if (!r.decoded || *r.decoded != replayed) {
      ++stats.replay_mismatches;
      stats.mismatch_lines.push_back(line_number);
    }

    for (const SharedKeyRecord& key : r.keys) {
      stats.key_bits_per_sender[key.sender] +=
          static_cast<std::int64_t>(key.certain_bits.size()) + 2;
    }

    if (r.decoded) {
      // Undo the decoded operations to recover the pre-encoding tuple; the
      // flip actions are involutions, so applying them again inverts them.
      const auto ops = encode_bits_to_ops(*r.decoded);
      BellTuple preimage(r.sender_outcomes.size());
      for (std::size_t k = 0; k < preimage.size(); ++k) {
        preimage[k] = apply_op_to_outcome(ops[k], r.sender_outcomes[k]);
      }
      if (!in_support(preimage, r.receiver_outcome)) ++stats.out_of_support;
      stats.preimage_counts[bell_tuple_token(preimage) + ":" +
                            bell_token(r.receiver_outcome)]++;
    }
  }

  stats.success_rate =
      stats.records == 0
          ? 1.0
          : 1.0 - static_cast<double>(stats.decode_failures + stats.replay_mismatches) /
                      static_cast<double>(stats.records);
  return stats;
}

std::string report_document(const ReportStats& stats) {
  std::ostringstream os;
  os << "# qsdc-report v1\n";
  os << "records = " << stats.records << "\n";
  os << "malformed = " << stats.malformed << "\n";
  for (const auto& [line, what] : stats.malformed_lines) {
    os << "malformed_line = " << line << " (" << what << ")\n";
  }
  os << "decode_failures = " << stats.decode_failures << "\n";
  os << "success_rate = " << format_fixed(stats.success_rate) << "\n";
  os << "replay_mismatches = " << stats.replay_mismatches << "\n";
  for (std::int64_t line : stats.mismatch_lines) os << "mismatch_line = " << line << "\n";
  for (const auto& [sender, bits] : stats.key_bits_per_sender) {
    os << "key_bits_sender_" << sender << " = " << bits << "\n";
  }
  os << "out_of_support_preimages = " << stats.out_of_support << "\n";
  if (!stats.preimage_counts.empty()) {
    // Token layout is "<2M outcome chars>:<receiver>"; support has 2*2^M tuples.
    const int num_senders =
        static_cast<int>(stats.preimage_counts.begin()->first.find(':')) / 2;
    const double expected = static_cast<double>(stats.records - stats.decode_failures) /
                            static_cast<double>(2 << num_senders);
    os << "preimage_expected_per_tuple = " << format_fixed(expected) << "\n";
    for (const auto& [token, count] : stats.preimage_counts) {
      os << "preimage " << token << " = " << count << "\n";
    }
  }
  return os.str();
}

}  // namespace qsdc
