#include "qsdc/config.hpp"

#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "qsdc/rng.hpp"

namespace qsdc {

namespace {

double parse_double(std::string_view s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("bad ") + what + ": " + std::string(s));
  }
}

int parse_int(std::string_view s, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError(std::string("bad ") + what + ": " + std::string(s));
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      parts.push_back(s.substr(pos));
      break;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

SimMode parse_sim_mode(const std::string& token) {
  if (token == "qsdc") return SimMode::Qsdc;
  if (token == "qkd") return SimMode::Qkd;
  if (token == "verify") return SimMode::Verify;
  if (token == "sweep") return SimMode::Sweep;
  throw ConfigError("mode must be one of qsdc, qkd, verify, sweep");
}

std::string sim_mode_token(SimMode mode) {
  switch (mode) {
    case SimMode::Qsdc:
      return "qsdc";
    case SimMode::Qkd:
      return "qkd";
    case SimMode::Verify:
      return "verify";
    case SimMode::Sweep:
      return "sweep";
  }
  return "?";
}

std::vector<int> EavesdropSpec::resolve_targets(int num_senders) const {
  switch (target) {
    case Target::Off:
      return {};
    case Target::Qubits:
      return qubits;
    case Target::Party: {
      const int offset = num_senders + 1;
      if (party == kReceiverParty) return {offset, 2 * offset};
      return {party, party + offset};
    }
    case Target::All: {
      std::vector<int> all(2 * (num_senders + 1));
      std::iota(all.begin(), all.end(), 1);
      return all;
    }
  }
  return {};
}

std::string EavesdropSpec::token() const {
  std::string s;
  switch (target) {
    case Target::Off:
      return "off";
    case Target::Qubits: {
      s = "qubit:";
      for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(qubits[i]);
      }
      break;
    }
    case Target::Party:
      s = "party:" + std::to_string(party);
      break;
    case Target::All:
      s = "all";
      break;
  }
  if (fraction != 1.0) s += "@" + format_double(fraction);
  return s;
}

EavesdropSpec parse_eavesdrop_spec(const std::string& token) {
  EavesdropSpec spec;
  std::string body = token;
  const auto at = body.find('@');
  if (at != std::string::npos) {
    spec.fraction = parse_double(body.substr(at + 1), "eavesdrop fraction");
    body = body.substr(0, at);
  }
  if (body == "off" || body.empty()) {
    spec.target = EavesdropSpec::Target::Off;
  } else if (body == "all") {
    spec.target = EavesdropSpec::Target::All;
  } else if (body.rfind("qubit:", 0) == 0) {
    spec.target = EavesdropSpec::Target::Qubits;
    for (const std::string& part : split(body.substr(6), ',')) {
      spec.qubits.push_back(parse_int(part, "eavesdrop qubit"));
    }
  } else if (body.rfind("party:", 0) == 0) {
    spec.target = EavesdropSpec::Target::Party;
    spec.party = parse_int(body.substr(6), "eavesdrop party");
  } else {
    throw ConfigError("bad eavesdrop spec: " + token);
  }
  return spec;
}

std::string MessageSourceSpec::token() const {
  switch (kind) {
    case Kind::Fixed:
      return "fixed:" + message_token(fixed);
    case Kind::Cyclic:
      return "cyclic";
    case Kind::Random:
      return "random";
  }
  return "?";
}

MessageSourceSpec parse_message_source(const std::string& token) {
  MessageSourceSpec spec;
  if (token == "cyclic") {
    spec.kind = MessageSourceSpec::Kind::Cyclic;
  } else if (token == "random") {
    spec.kind = MessageSourceSpec::Kind::Random;
  } else if (token.rfind("fixed:", 0) == 0) {
    spec.kind = MessageSourceSpec::Kind::Fixed;
    try {
      spec.fixed = parse_message_token(token.substr(6));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    throw ConfigError("message source must be fixed:<bits>, cyclic or random");
  }
  return spec;
}

NoiseModel parse_noise_spec(const std::string& token) {
  const auto parts = split(token, ',');
  if (parts.size() != 3) throw ConfigError("noise spec must be px,py,pz");
  return NoiseModel{parse_double(parts[0], "noise probability"),
                    parse_double(parts[1], "noise probability"),
                    parse_double(parts[2], "noise probability")};
}

std::vector<int> parse_index_list(const std::string& token) {
  std::vector<int> out;
  for (const std::string& part : split(token, ',')) {
    out.push_back(parse_int(part, "qubit index"));
  }
  return out;
}

std::vector<double> parse_sweep_points(const std::string& token) {
  std::vector<double> out;
  for (const std::string& part : split(token, ',')) {
    out.push_back(parse_double(part, "sweep point"));
  }
  return out;
}

void SimulationConfig::validate() const {
  if (parties < kMinSenders || parties > kMaxSenders) {
    throw ConfigError("--parties must be in 2..6");
  }
  if (groups < 1) throw ConfigError("--groups must be at least 1");
  try {
    noise.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (test_fraction < 0 || test_fraction >= 1) {
    throw ConfigError("--test-fraction must lie in [0,1)");
  }
  if (failure_threshold < 0 || failure_threshold > 1) {
    throw ConfigError("--failure-threshold must lie in [0,1]");
  }
  if (messages.kind == MessageSourceSpec::Kind::Fixed &&
      messages.fixed.num_senders() != parties) {
    throw ConfigError("fixed message does not match --parties");
  }
  const int num_particles = 2 * (parties + 1);
  for (int q : noise_targets) {
    if (q < 1 || q > num_particles) throw ConfigError("noise target out of range");
  }
  if (eavesdrop.active()) {
    if (eavesdrop.fraction < 0 || eavesdrop.fraction > 1) {
      throw ConfigError("eavesdrop fraction must lie in [0,1]");
    }
    for (int q : eavesdrop.resolve_targets(parties)) {
      if (q < 1 || q > num_particles) throw ConfigError("eavesdrop target out of range");
    }
  }
  if (mode == SimMode::Sweep) {
    if (sweep_points.empty()) throw ConfigError("sweep needs at least one point");
    for (double s : sweep_points) {
      if (s < 0 || s > 1) throw ConfigError("sweep points must lie in [0,1]");
    }
  }
  if (out_path.empty()) throw ConfigError("--out must not be empty");
}

std::string SimulationConfig::canonical_string() const {
  std::ostringstream os;
  os << "M=" << parties << ";N=" << groups << ";seed=" << seed
     << ";mode=" << sim_mode_token(mode) << ";noise=" << format_double(noise.p_x) << ','
     << format_double(noise.p_y) << ',' << format_double(noise.p_z) << ";noise_targets=";
  for (std::size_t i = 0; i < noise_targets.size(); ++i) {
    if (i) os << ',';
    os << noise_targets[i];
  }
  os << ";eavesdrop=" << eavesdrop.token()
     << ";test_fraction=" << format_double(test_fraction)
     << ";messages=" << messages.token()
     << ";verify_mode=" << verify_mode_token(verify_mode)
     << ";failure_threshold=" << format_double(failure_threshold) << ";sweep=";
  for (std::size_t i = 0; i < sweep_points.size(); ++i) {
    if (i) os << ',';
    os << format_double(sweep_points[i]);
  }
  return os.str();
}

std::uint64_t SimulationConfig::fingerprint() const { return fnv1a64(canonical_string()); }

}  // namespace qsdc
