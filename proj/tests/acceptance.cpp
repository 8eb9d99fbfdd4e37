// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a PASS/FAIL line. Checks 7, 8 and 10 drive the qsdc_sim binary
// (path via --cli or QSDC_SIM_BIN); the rest go through the library.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsdc/decode.hpp"
#include "qsdc/decomposition.hpp"
#include "qsdc/measure.hpp"
#include "qsdc/round.hpp"
#include "qsdc/stabilizer.hpp"

#ifdef _WIN32
#error "the acceptance runner assumes a POSIX shell"
#endif
#include <sys/wait.h>

using namespace qsdc;
namespace fs = std::filesystem;

namespace {

struct AcceptanceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REQUIRE_THAT(cond, message)                                       \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::ostringstream os_;                                             \
      os_ << message << " [" << __FILE__ << ":" << __LINE__ << "]";       \
      throw AcceptanceFailure(os_.str());                                 \
    }                                                                     \
  } while (0)

std::string g_cli_path = "./qsdc_sim";

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qsdc-acceptance";
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string& args) {
  const std::string command = "'" + g_cli_path + "' " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  REQUIRE_THAT(status != -1, "failed to spawn the CLI");
  REQUIRE_THAT(WIFEXITED(status), "CLI did not exit normally");
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_THAT(in.good(), "cannot read " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::pair<int, int>> canonical_pairing(int num_pairs) {
  std::vector<std::pair<int, int>> pairing;
  for (int k = 1; k <= num_pairs; ++k) pairing.emplace_back(k, k + num_pairs);
  return pairing;
}

GroupRegister fresh_group(int num_senders, std::int64_t id) {
  const PureState half = make_ghz(num_senders + 1);
  return GroupRegister{id, num_senders, tensor(half, half), false};
}

// ---------------------------------------------------------------------------
// 1. The two-GHZ decomposition reproduces the sixteen +1/4 terms exactly.
void criterion_eq6_exactness() {
  const std::vector<std::string> printed = {
      "F+F+F+F+", "F+F+F-F-", "F+F-F+F-", "F+F-F-F+",
      "F-F+F+F-", "F-F+F-F+", "F-F-F+F+", "F-F-F-F-",
      "P+P+P+P+", "P+P+P-P-", "P+P-P+P-", "P+P-P-P+",
      "P-P+P+P-", "P-P+P-P+", "P-P-P+P+", "P-P-P-P-",
  };
  const auto d =
      bell_decomposition(tensor(make_ghz(4), make_ghz(4)), canonical_pairing(4));
  std::set<std::string> listed(printed.begin(), printed.end());
  REQUIRE_THAT(listed.size() == 16, "the printed list has 16 distinct tuples");
  for (const std::string& token : printed) {
    const auto c = d.coefficient(parse_bell_tuple_token(token));
    REQUIRE_THAT(std::abs(c - std::complex<double>(0.25)) <= 1e-12,
                 token << " coefficient " << c << " != +1/4");
  }
  int zeros = 0;
  for (int code = 0; code < 256; ++code) {
    const BellTuple t = bell_tuple_from_code(code, 4);
    if (listed.count(bell_tuple_token(t))) continue;
    REQUIRE_THAT(std::abs(d.coefficient(t)) <= 1e-12,
                 bell_tuple_token(t) << " should vanish");
    ++zeros;
  }
  REQUIRE_THAT(zeros == 240, "expected 240 vanishing coefficients, saw " << zeros);
}

// ---------------------------------------------------------------------------
// 2. The encoded worked-example state decomposes with the printed signs.
void criterion_eq8_exactness() {
  const std::vector<std::pair<std::string, double>> printed = {
      {"P+F+P+F+", +0.25}, {"P+F+P-F-", -0.25}, {"P+F-P+F-", +0.25}, {"P+F-P-F+", -0.25},
      {"P-F+P+F-", -0.25}, {"P-F+P-F+", +0.25}, {"P-F-P+F+", -0.25}, {"P-F-P-F-", +0.25},
      {"F+P+F+P+", +0.25}, {"F+P+F-P-", -0.25}, {"F+P-F+P-", +0.25}, {"F+P-F-P+", -0.25},
      {"F-P+F+P-", -0.25}, {"F-P+F-P+", +0.25}, {"F-P-F+P+", -0.25}, {"F-P-F-P-", +0.25},
  };
  PureState encoded = apply_single_qubit(make_ghz(4), 1, PauliLabel::X);
  encoded = apply_single_qubit(encoded, 3, PauliLabel::X);
  const auto d = bell_decomposition(tensor(encoded, make_ghz(4)), canonical_pairing(4));
  std::set<std::string> listed;
  for (const auto& [token, value] : printed) {
    listed.insert(token);
    const auto c = d.coefficient(parse_bell_tuple_token(token));
    REQUIRE_THAT(std::abs(c - std::complex<double>(value)) <= 1e-12,
                 token << " coefficient " << c << " != " << value);
  }
  for (int code = 0; code < 256; ++code) {
    const BellTuple t = bell_tuple_from_code(code, 4);
    if (listed.count(bell_tuple_token(t))) continue;
    REQUIRE_THAT(std::abs(d.coefficient(t)) <= 1e-12,
                 bell_tuple_token(t) << " should vanish");
  }
}

// ---------------------------------------------------------------------------
// 3. Worked-example decode, with the uniqueness count done by hand.
void criterion_worked_example_decode() {
  const BellTuple announced = parse_bell_tuple_token("P-F+P-");
  const MessageTuple expected = parse_message_token("01,0,1");
  REQUIRE_THAT(decode_search(kPhiPlus, announced, 3) == expected, "search decoder");
  REQUIRE_THAT(decode_analytic(kPhiPlus, announced, 3) == expected, "analytic decoder");

  const CandidateSet cs = candidate_set(kPhiPlus, 3);
  int consistent = 0;
  for (int index = 0; index < message_space_size(3); ++index) {
    const auto ops = encode_bits_to_ops(message_from_index(index, 3));
    bool matches = false;
    for (const BellTuple& candidate : cs.candidates) {
      BellTuple mapped(3);
      for (int k = 0; k < 3; ++k) mapped[k] = apply_op_to_outcome(ops[k], candidate[k]);
      if (mapped == announced) matches = true;
    }
    if (matches) ++consistent;
  }
  REQUIRE_THAT(consistent == 1,
               "exactly one of the 16 operation tuples must fit, saw " << consistent);
}

// ---------------------------------------------------------------------------
// 4. Round trips: exhaustive over branches at M=3, randomized for M in 4..6.
void criterion_round_trip() {
  // Every message, every reachable branch of the post-encoding decomposition.
  for (int index = 0; index < 16; ++index) {
    const MessageTuple message = message_from_index(index, 3);
    const auto ops = encode_bits_to_ops(message);
    PureState encoded = make_ghz(4);
    for (int k = 0; k < 3; ++k) {
      encoded = apply_single_qubit(encoded, k + 1, ops[k]);
    }
    const auto d = bell_decomposition(tensor(encoded, make_ghz(4)), canonical_pairing(4));
    const auto terms = d.nonzero_terms();
    REQUIRE_THAT(terms.size() == 16, "16 reachable branches per message");
    for (const auto& [tuple, coeff] : terms) {
      const BellTuple senders(tuple.begin(), tuple.end() - 1);
      REQUIRE_THAT(decode_analytic(tuple.back(), senders, 3) == message,
                   "branch decodes to the sent message");
      REQUIRE_THAT(decode_search(tuple.back(), senders, 3) == message,
                   "search agrees on the branch");
    }
  }

  // Sampled branches, 16 messages x 64 streams.
  int sampled_good = 0;
  for (int index = 0; index < 16; ++index) {
    const MessageTuple message = message_from_index(index, 3);
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
      GroupRegister group = fresh_group(3, attempt);
      RngStream rng = derive_stream(2024, "acc-roundtrip",
                                    static_cast<std::uint64_t>(index) * 64 + attempt);
      const RoundTranscript t = run_group(group, message, rng);
      if (!t.decode_failed() && *t.decoded == message) ++sampled_good;
    }
  }
  REQUIRE_THAT(sampled_good == 1024, "1024/1024 sampled branches, saw " << sampled_good);

  // Randomized sweeps at the larger sizes must decode perfectly too.
  for (int m : {4, 5, 6}) {
    RngStream message_rng = derive_stream(2024, "acc-messages", m);
    std::uniform_int_distribution<int> dist(0, message_space_size(m) - 1);
    int good = 0;
    for (int g = 0; g < 1000; ++g) {
      const MessageTuple message = message_from_index(dist(message_rng), m);
      GroupRegister group = fresh_group(m, g);
      RngStream rng = derive_stream(2024, "acc-wide", m * 100000 + g);
      const RoundTranscript t = run_group(group, message, rng);
      if (!t.decode_failed() && *t.decoded == message) ++good;
    }
    REQUIRE_THAT(good == 1000, "M=" << m << " success rate 1.0, saw " << good << "/1000");
  }
}

// ---------------------------------------------------------------------------
// 5. Outcome statistics over 16000 noiseless identity-message groups.
void criterion_outcome_statistics() {
  const std::set<std::string> support = [] {
    std::set<std::string> s;
    for (int type = 0; type < 2; ++type) {
      for (int signs = 0; signs < 16; ++signs) {
        if (__builtin_parity(signs)) continue;
        BellTuple t;
        for (int k = 3; k >= 0; --k) {
          t.push_back(BellOutcome{static_cast<std::uint8_t>(type),
                                  static_cast<std::uint8_t>((signs >> k) & 1)});
        }
        s.insert(bell_tuple_token(t));
      }
    }
    return s;
  }();

  const MessageTuple zero = parse_message_token("00,0,0");
  std::map<std::string, int> counts;
  const int groups = 16000;
  for (int g = 0; g < groups; ++g) {
    GroupRegister group = fresh_group(3, g);
    RngStream rng = derive_stream(5150, "acc-stats", g);
    const RoundTranscript t = run_group(group, zero, rng);
    BellTuple quad = t.sender_outcomes;
    quad.push_back(t.receiver_outcome);
    const std::string token = bell_tuple_token(quad);
    REQUIRE_THAT(support.count(token) == 1, "out-of-support quadruple " << token);
    ++counts[token];
  }
  REQUIRE_THAT(counts.size() == 16, "all 16 quadruples occur, saw " << counts.size());
  const double expected = groups / 16.0;
  const double sigma = std::sqrt(groups * (1.0 / 16) * (15.0 / 16));
  for (const auto& [token, count] : counts) {
    REQUIRE_THAT(std::abs(count - expected) <= 4 * sigma,
                 token << " count " << count << " outside 4 sigma of " << expected);
  }
}

// ---------------------------------------------------------------------------
// 6. Stabilizer identity on clean GHZ states; single-error detection.
void criterion_stabilizer_detection() {
  for (int n = 3; n <= 7; ++n) {
    const PureState ghz = make_ghz(n);
    const auto stabilizers = ghz_stabilizers(n);
    for (const StabilizerOperator& s : stabilizers) {
      REQUIRE_THAT(std::abs(stabilizer_expectation(ghz, s) - 1.0) <= 1e-12,
                   "GHZ(" << n << ") expectation on " << s.token());
    }
    for (int q = 1; q <= n; ++q) {
      for (PauliLabel op : {PauliLabel::X, PauliLabel::Yp, PauliLabel::Z}) {
        const PureState corrupted = apply_single_qubit(ghz, q, op);
        bool flipped = false;
        for (const StabilizerOperator& s : stabilizers) {
          if (std::abs(stabilizer_expectation(corrupted, s) + 1.0) <= 1e-12) {
            flipped = true;
          }
        }
        REQUIRE_THAT(flipped, "no -1 stabilizer for n=" << n << " qubit " << q
                                                        << " op " << pauli_token(op));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 7. QKD key accounting through the CLI.
void criterion_key_accounting() {
  const fs::path out = scratch("qkd-accounting.transcript");
  const int exit_code =
      run_cli("--mode qkd --parties 3 --groups 1000 --seed 424242 --test-fraction 0 "
              "--messages random --out '" + out.string() + "'");
  REQUIRE_THAT(exit_code == 0, "qkd run exited with " << exit_code);

  const std::string summary = read_file(out.string() + ".summary");
  REQUIRE_THAT(summary.find("key_views_match = yes") != std::string::npos,
               "receiver and sender views must match");
  REQUIRE_THAT(summary.find("key_bits_sender_1 = 4000") != std::string::npos,
               "sender 1 accumulates 2+2 bits over 1000 groups");
  REQUIRE_THAT(summary.find("key_bits_sender_2 = 3000") != std::string::npos,
               "sender 2 accumulates 1+2 bits over 1000 groups");
  REQUIRE_THAT(summary.find("key_bits_sender_3 = 3000") != std::string::npos,
               "sender 3 accumulates 1+2 bits over 1000 groups");

  // Byte-identical key strings per sender, straight from the key file.
  std::istringstream keys(read_file(out.string() + ".keys"));
  std::string line;
  std::getline(keys, line);  // header
  int senders_checked = 0;
  std::string receiver_bits;
  while (std::getline(keys, line)) {
    const std::string bits = line.substr(line.find("bits=") + 5);
    if (line.find("view=receiver") != std::string::npos) {
      receiver_bits = bits;
    } else {
      REQUIRE_THAT(bits == receiver_bits, "key views differ in " << line);
      REQUIRE_THAT(bits.size() == (senders_checked == 0 ? 4000u : 3000u),
                   "key length off in " << line);
      ++senders_checked;
    }
  }
  REQUIRE_THAT(senders_checked == 3, "three senders in the key file");

  // Random-bit pairs uniform over 4 values within 4 sigma, from the summary.
  const double expected = 1000 / 4.0;
  const double sigma = std::sqrt(1000 * 0.25 * 0.75);
  for (int k = 1; k <= 3; ++k) {
    const std::string key = "random_pairs_sender_" + std::to_string(k) + " = ";
    const auto pos = summary.find(key);
    REQUIRE_THAT(pos != std::string::npos, "missing " << key);
    std::istringstream pair_counts(summary.substr(pos + key.size()));
    std::string field;
    int fields = 0;
    while (std::getline(pair_counts, field, fields < 3 ? ',' : '\n') && fields < 4) {
      const double count = std::stod(field);
      REQUIRE_THAT(std::abs(count - expected) <= 4 * sigma,
                   "sender " << k << " pair count " << count << " outside 4 sigma");
      ++fields;
    }
    REQUIRE_THAT(fields == 4, "four pair counts per sender");
  }
}

// ---------------------------------------------------------------------------
// 8. Intercept-resend on one fixed particle is rejected on every seed.
void criterion_adversary_detection() {
  for (int seed = 1; seed <= 20; ++seed) {
    const fs::path out = scratch("verify-" + std::to_string(seed) + ".out");
    const int exit_code = run_cli(
        "--mode verify --parties 3 --groups 100 --seed " + std::to_string(seed) +
        " --eavesdrop qubit:1 --verify-mode expectation --out '" + out.string() + "'");
    REQUIRE_THAT(exit_code == 3, "seed " << seed << " exited with " << exit_code
                                         << " instead of 3 (channel rejected)");
  }
  // And a clean channel is accepted, to pin the exit-code distinction.
  const fs::path out = scratch("verify-clean.out");
  const int exit_code = run_cli("--mode verify --parties 3 --groups 100 --seed 1 --out '" +
                                out.string() + "'");
  REQUIRE_THAT(exit_code == 0, "clean channel must verify, exited " << exit_code);
}

// ---------------------------------------------------------------------------
// 9. The analytic decoder equals the search on the full domain, M in {3,4}.
void criterion_decoder_equivalence() {
  for (int m : {3, 4}) {
    for (int r = 0; r < 4; ++r) {
      const BellOutcome receiver = BellOutcome::from_index(r);
      for (int code = 0; code < (1 << (2 * m)); ++code) {
        const BellTuple announced = bell_tuple_from_code(code, m);
        REQUIRE_THAT(decode_analytic(receiver, announced, m) ==
                         decode_search(receiver, announced, m),
                     "mismatch at M=" << m << " receiver " << bell_token(receiver)
                                      << " announced " << bell_tuple_token(announced));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// 10. Byte-identical transcripts for identical config and seed.
void criterion_determinism() {
  const fs::path out_a = scratch("det-a.transcript");
  const fs::path out_b = scratch("det-b.transcript");
  const std::string args =
      "--mode qsdc --parties 3 --groups 16 --seed 99 --messages cyclic --out '";
  REQUIRE_THAT(run_cli(args + out_a.string() + "'") == 0, "first run failed");
  REQUIRE_THAT(run_cli(args + out_b.string() + "'") == 0, "second run failed");
  REQUIRE_THAT(read_file(out_a) == read_file(out_b), "transcripts differ");
  REQUIRE_THAT(read_file(out_a.string() + ".summary") ==
                   read_file(out_b.string() + ".summary"),
               "summaries differ");
}

struct Criterion {
  int number;
  std::string name;
  double time_limit_seconds;  // 0 = no limit pinned
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
  }
  if (const char* env = std::getenv("QSDC_SIM_BIN")) g_cli_path = env;

  const std::vector<Criterion> criteria = {
      {1, "eq6-decomposition-exact", 1.0, criterion_eq6_exactness},
      {2, "eq8-encoded-signs-exact", 0, criterion_eq8_exactness},
      {3, "worked-example-decode-unique", 0, criterion_worked_example_decode},
      {4, "round-trip-exhaustive-and-randomized", 30.0, criterion_round_trip},
      {5, "outcome-statistics-16000-groups", 0, criterion_outcome_statistics},
      {6, "stabilizer-identity-and-detection", 0, criterion_stabilizer_detection},
      {7, "qkd-key-accounting", 0, criterion_key_accounting},
      {8, "adversary-detection-20-seeds", 0, criterion_adversary_detection},
      {9, "decoder-equivalence-full-domain", 0, criterion_decoder_equivalence},
      {10, "determinism-byte-identical", 0, criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && criterion.time_limit_seconds > 0 &&
        elapsed > criterion.time_limit_seconds) {
      std::ostringstream os;
      os << "took " << elapsed << " s, limit " << criterion.time_limit_seconds << " s";
      error = os.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    if (error.empty()) {
      std::cout << "[PASS] " << criterion.number << ". " << criterion.name << " ("
                << timing << ")\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << criterion.number << ". " << criterion.name << " ("
                << timing << "): " << error << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " of " << criteria.size() << " acceptance criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  return 0;
}
