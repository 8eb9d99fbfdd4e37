#include "qsdc/transcript.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qsdc {

namespace {

std::string bits_token(const std::vector<std::uint8_t>& bits) {
  std::string s;
  for (std::uint8_t b : bits) s += ('0' + b);
  return s;
}

std::vector<std::uint8_t> parse_bits(std::string_view s) {
  std::vector<std::uint8_t> bits;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad bit string");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::uint64_t parse_u64_hex(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad hex field");
  }
  return v;
}

std::int64_t parse_i64(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer field");
  }
  return v;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

TranscriptRecord make_record(const RoundTranscript& t, std::uint64_t config_fingerprint) {
  TranscriptRecord r;
  r.config_fingerprint = config_fingerprint;
  r.group_id = t.group_id;
  r.num_senders = t.num_senders;
  r.message = t.message;
  r.operations = t.operations;
  r.sender_outcomes = t.sender_outcomes;
  r.receiver_outcome = t.receiver_outcome;
  r.candidates = t.candidates.candidates;
  r.decoded = t.decoded;
  r.keys = extract_shared_keys(t);
  return r;
}

std::string record_to_line(const TranscriptRecord& r) {
  std::ostringstream os;
  os << "qsdc" << r.schema_version;
  os << " cfg=" << hex16(r.config_fingerprint);
  os << " g=" << r.group_id;
  os << " M=" << r.num_senders;
  os << " msg=" << message_token(r.message);
  os << " ops=" << ops_token(r.operations);
  os << " sout=" << bell_tuple_token(r.sender_outcomes);
  os << " rout=" << bell_token(r.receiver_outcome);
  os << " cand=";
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    if (i) os << '|';
    os << bell_tuple_token(r.candidates[i]);
  }
  os << " dec=" << (r.decoded ? message_token(*r.decoded) : std::string("FAIL"));
  os << " keys=";
  if (r.keys.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < r.keys.size(); ++i) {
      if (i) os << '|';
      os << bits_token(r.keys[i].certain_bits) << ':'
         << static_cast<int>(r.keys[i].random_bits[0])
         << static_cast<int>(r.keys[i].random_bits[1]);
    }
  }
  return os.str();
}

TranscriptRecord parse_record_line(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  is >> tag;
  if (tag != "qsdc1") throw std::invalid_argument("unknown record tag: " + tag);

  std::map<std::string, std::string> fields;
  std::string token;
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("field without '=': " + token);
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  auto need = [&](const char* key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) {
      throw std::invalid_argument(std::string("missing field: ") + key);
    }
    return it->second;
  };

  TranscriptRecord r;
  r.schema_version = 1;
  r.config_fingerprint = parse_u64_hex(need("cfg"));
  r.group_id = parse_i64(need("g"));
  r.num_senders = static_cast<int>(parse_i64(need("M")));
  r.message = parse_message_token(need("msg"));
  r.operations = parse_ops_token(need("ops"));
  r.sender_outcomes = parse_bell_tuple_token(need("sout"));
  r.receiver_outcome = parse_bell_token(need("rout"));

  const std::string& cand = need("cand");
  std::size_t pos = 0;
  while (pos < cand.size()) {
    std::size_t bar = cand.find('|', pos);
    if (bar == std::string::npos) bar = cand.size();
    r.candidates.push_back(parse_bell_tuple_token(cand.substr(pos, bar - pos)));
    pos = bar + 1;
  }

  const std::string& dec = need("dec");
  if (dec != "FAIL") r.decoded = parse_message_token(dec);

  const std::string& keys = need("keys");
  if (keys != "-") {
    int sender = 1;
    pos = 0;
    while (pos < keys.size()) {
      std::size_t bar = keys.find('|', pos);
      if (bar == std::string::npos) bar = keys.size();
      const std::string part = keys.substr(pos, bar - pos);
      const auto colon = part.find(':');
      if (colon == std::string::npos || part.size() != colon + 3) {
        throw std::invalid_argument("bad key field: " + part);
      }
      SharedKeyRecord rec;
      rec.sender = sender++;
      rec.certain_bits = parse_bits(part.substr(0, colon));
      const auto random = parse_bits(part.substr(colon + 1));
      rec.random_bits = {random[0], random[1]};
      r.keys.push_back(std::move(rec));
      pos = bar + 1;
    }
  }

  // Shape checks so a malformed line cannot masquerade as a record.
  const int m = r.num_senders;
  if (m < kMinSenders || m > kMaxSenders || r.message.num_senders() != m ||
      static_cast<int>(r.operations.size()) != m ||
      static_cast<int>(r.sender_outcomes.size()) != m ||
      static_cast<int>(r.candidates.size()) != (1 << (m - 1)) ||
      (r.decoded && r.decoded->num_senders() != m) ||
      (!r.keys.empty() && static_cast<int>(r.keys.size()) != m)) {
    throw std::invalid_argument("record fields disagree about the sender count");
  }
  return r;
}

}  // namespace qsdc
