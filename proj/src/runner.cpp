#include "qsdc/runner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qsdc/adversary.hpp"
#include "qsdc/round.hpp"
#include "qsdc/transcript.hpp"

namespace qsdc {

namespace {

std::string format_fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

MessageTuple pick_message(const SimulationConfig& config, std::int64_t round_index,
                          RngStream& rng) {
  switch (config.messages.kind) {
    case MessageSourceSpec::Kind::Fixed:
      return config.messages.fixed;
    case MessageSourceSpec::Kind::Cyclic:
      return message_from_index(
          static_cast<int>(round_index % message_space_size(config.parties)),
          config.parties);
    case MessageSourceSpec::Kind::Random: {
      std::uniform_int_distribution<int> dist(0, message_space_size(config.parties) - 1);
      return message_from_index(dist(rng), config.parties);
    }
  }
  throw std::logic_error("unknown message source");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open output file: " + path);
  return out;
}

struct KeyAccumulator {
  // One bit string per sender and view, concatenated across groups.
  std::vector<std::string> receiver_view;
  std::vector<std::string> sender_view;
  std::vector<std::array<std::int64_t, 4>> random_pair_counts;

  explicit KeyAccumulator(int num_senders)
      : receiver_view(num_senders),
        sender_view(num_senders),
        random_pair_counts(num_senders, {0, 0, 0, 0}) {}

  static void append(std::string& dst, const SharedKeyRecord& rec) {
    for (std::uint8_t b : rec.certain_bits) dst += static_cast<char>('0' + b);
    dst += static_cast<char>('0' + rec.random_bits[0]);
    dst += static_cast<char>('0' + rec.random_bits[1]);
  }

  void add(const RoundTranscript& t) {
    const auto receiver = extract_shared_keys(t);
    const auto sender = extract_shared_keys_sender_view(t);
    for (const SharedKeyRecord& rec : receiver) {
      append(receiver_view[rec.sender - 1], rec);
      random_pair_counts[rec.sender - 1][rec.random_bits[0] * 2 + rec.random_bits[1]]++;
    }
    for (const SharedKeyRecord& rec : sender) append(sender_view[rec.sender - 1], rec);
  }

  bool views_match() const { return receiver_view == sender_view; }
};

}  // namespace

std::string RunResult::summary_document() const {
  std::ostringstream os;
  os << "# qsdc-summary v1\n";
  for (const auto& [key, value] : summary) os << key << " = " << value << "\n";
  return os.str();
}

RunResult run_simulation(const SimulationConfig& config) {
  config.validate();
  const std::uint64_t fp = config.fingerprint();

  RunResult result;
  auto put = [&](const std::string& key, const std::string& value) {
    result.summary.emplace_back(key, value);
  };
  put("mode", sim_mode_token(config.mode));
  put("parties", std::to_string(config.parties));
  put("groups", std::to_string(config.groups));
  put("seed", std::to_string(config.seed));
  put("config_fingerprint", hex16(fp));

  if (config.mode == SimMode::Sweep) {
    SweepConfig sweep;
    sweep.num_senders = config.parties;
    sweep.groups_per_point = config.groups;
    sweep.points = config.sweep_points;
    sweep.base_noise = config.noise;
    sweep.noise_targets = config.noise_targets;
    sweep.eavesdrop_targets = config.eavesdrop.resolve_targets(config.parties);
    sweep.mode = config.verify_mode;
    const SweepSummary summary = detection_statistics(sweep, config.seed);
    put("sweep_points", std::to_string(summary.points.size()));
    for (std::size_t i = 0; i < summary.points.size(); ++i) {
      const SweepPoint& pt = summary.points[i];
      std::ostringstream line;
      line << "strength=" << format_fixed(pt.strength) << " groups=" << pt.groups
           << " detected=" << pt.detected << " rate=" << format_fixed(pt.rate)
           << " stderr=" << format_fixed(pt.standard_error);
      put("point_" + std::to_string(i), line.str());
    }
    put("exit", std::to_string(result.exit_code));
    open_out(config.out_path + ".summary") << result.summary_document();
    return result;
  }

  // Distribution phase, with the channel imperfections folded in.
  RngStream distribute_rng = derive_stream(config.seed, "distribute");
  std::vector<GroupRegister> groups =
      distribute(config.groups, config.parties, distribute_rng);
  const std::vector<int> eve_targets = config.eavesdrop.resolve_targets(config.parties);
  for (GroupRegister& group : groups) {
    const auto g = static_cast<std::uint64_t>(group.group_id);
    if (!config.noise.is_identity()) {
      RngStream rng = derive_stream(config.seed, "noise", g);
      group = apply_noise(std::move(group), config.noise, rng, config.noise_targets);
    }
    if (config.eavesdrop.active()) {
      RngStream rng = derive_stream(config.seed, "eavesdrop", g);
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      if (dist(rng) < config.eavesdrop.fraction) {
        group = intercept_resend(std::move(group), eve_targets, rng);
      }
    }
  }

  // Channel verification: every group in verify mode, the sacrificed test
  // fraction otherwise.
  std::vector<std::int64_t> test_ids;
  if (config.mode == SimMode::Verify) {
    test_ids.resize(groups.size());
    std::iota(test_ids.begin(), test_ids.end(), 0);
  } else if (config.test_fraction > 0) {
    std::vector<std::int64_t> ids(groups.size());
    std::iota(ids.begin(), ids.end(), 0);
    RngStream rng = derive_stream(config.seed, "test-selection");
    std::shuffle(ids.begin(), ids.end(), rng);
    const auto count = static_cast<std::size_t>(
        std::llround(config.test_fraction * static_cast<double>(groups.size())));
    ids.resize(std::min(count, ids.size()));
    std::sort(ids.begin(), ids.end());
    test_ids = std::move(ids);
  }

  if (!test_ids.empty()) {
    std::vector<GroupRegister*> sample;
    sample.reserve(test_ids.size());
    for (std::int64_t id : test_ids) sample.push_back(&groups[id]);
    // verify_channel wants contiguous storage; run it per group, merging.
    RngStream rng = derive_stream(config.seed, "verify");
    bool all_passed = true;
    for (GroupRegister* group : sample) {
      const VerificationReport report =
          verify_channel(std::span<GroupRegister>(group, 1), config.verify_mode, rng);
      all_passed = all_passed && report.passed;
      ++result.groups_tested;
    }
    result.verification_passed = all_passed;
  }

  put("verification", !result.verification_passed
                          ? "skipped"
                          : (*result.verification_passed ? "passed" : "failed"));
  put("groups_tested", std::to_string(result.groups_tested));

  if (config.mode == SimMode::Verify) {
    if (result.verification_passed && !*result.verification_passed) {
      result.exit_code = kExitChannelRejected;
    }
    put("exit", std::to_string(result.exit_code));
    open_out(config.out_path + ".summary") << result.summary_document();
    return result;
  }

  // Message rounds on the surviving groups, transcript in group order.
  std::ofstream transcript = open_out(config.out_path);
  transcript << "# qsdc-transcript v1 cfg=" << hex16(fp) << "\n";
  RngStream message_rng = derive_stream(config.seed, "messages");
  KeyAccumulator keys(config.parties);
  std::int64_t round_index = 0;
  for (GroupRegister& group : groups) {
    if (group.consumed) continue;
    const MessageTuple message = pick_message(config, round_index, message_rng);
    RngStream rng = derive_stream(config.seed, "group",
                                  static_cast<std::uint64_t>(group.group_id));
    const RoundTranscript t = run_group(group, message, rng);
    ++result.rounds;
    ++round_index;
    if (t.decode_failed() || *t.decoded != message) ++result.decode_failures;
    if (config.mode == SimMode::Qkd && !t.decode_failed()) keys.add(t);
    transcript << record_to_line(make_record(t, fp)) << "\n";
  }
  transcript.close();

  result.success_rate =
      result.rounds == 0
          ? 1.0
          : 1.0 - static_cast<double>(result.decode_failures) / static_cast<double>(result.rounds);
  put("groups_messaged", std::to_string(result.rounds));
  put("decode_failures", std::to_string(result.decode_failures));
  put("success_rate", format_fixed(result.success_rate));
  put("failure_fraction", format_fixed(1.0 - result.success_rate));
  const double rate_stderr =
      result.rounds == 0 ? 0.0
                         : std::sqrt(result.success_rate * (1.0 - result.success_rate) /
                                     static_cast<double>(result.rounds));
  put("success_rate_stderr", format_fixed(rate_stderr));

  if (config.mode == SimMode::Qkd) {
    std::ofstream key_file = open_out(config.out_path + ".keys");
    key_file << "# qsdc-keys v1 cfg=" << hex16(fp) << "\n";
    for (int k = 1; k <= config.parties; ++k) {
      key_file << "sender=" << k << " view=receiver bits=" << keys.receiver_view[k - 1]
               << "\n";
      key_file << "sender=" << k << " view=sender bits=" << keys.sender_view[k - 1] << "\n";
    }
    put("key_views_match", keys.views_match() ? "yes" : "no");
    for (int k = 1; k <= config.parties; ++k) {
      put("key_bits_sender_" + std::to_string(k),
          std::to_string(keys.receiver_view[k - 1].size()));
      const auto& counts = keys.random_pair_counts[k - 1];
      std::ostringstream pairs;
      pairs << counts[0] << ',' << counts[1] << ',' << counts[2] << ',' << counts[3];
      put("random_pairs_sender_" + std::to_string(k), pairs.str());
    }
    if (!keys.views_match()) {
      throw std::logic_error("sender and receiver key views disagree");
    }
  }

  if (result.verification_passed && !*result.verification_passed) {
    result.exit_code = kExitChannelRejected;
  } else if (result.rounds > 0 &&
             1.0 - result.success_rate > config.failure_threshold + 1e-15) {
    result.exit_code = kExitFailureRate;
  }
  put("exit", std::to_string(result.exit_code));
  open_out(config.out_path + ".summary") << result.summary_document();
  return result;
}

}  // namespace qsdc
