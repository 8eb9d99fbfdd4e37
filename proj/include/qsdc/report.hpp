#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qsdc {

/// What report_stats recomputes from a transcript file. Replay means running
/// the analytic decoder over the stored outcomes and comparing with the
/// stored decode.
struct ReportStats {
  std::int64_t records = 0;
  std::int64_t malformed = 0;
  std::vector<std::pair<std::int64_t, std::string>> malformed_lines;
  std::int64_t decode_failures = 0;
  double success_rate = 1.0;
  std::int64_t replay_mismatches = 0;
  std::vector<std::int64_t> mismatch_lines;
  std::map<int, std::int64_t> key_bits_per_sender;
  // Pre-encoding outcome tuples (operations undone), keyed by token
  // "<senders>:<receiver>"; uniform over 2*2^M values on honest transcripts.
  std::map<std::string, std::int64_t> preimage_counts;
  std::int64_t out_of_support = 0;  // preimages violating type/parity
};

ReportStats report_stats(const std::string& transcript_path);

/// Key-value document, one line per fact, mismatches and malformed lines
/// carrying their line numbers.
std::string report_document(const ReportStats& stats);

}  // namespace qsdc
