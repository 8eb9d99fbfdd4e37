#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qsdc {

/// Deterministic random stream. One 64-bit master seed drives the whole
/// simulation; every consumer derives its own independent stream from
/// (seed, label, index) so that groups can be evaluated in any order.
using RngStream = std::mt19937_64;

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline RngStream derive_stream(std::uint64_t master_seed, std::string_view label,
                               std::uint64_t index = 0) {
  std::uint64_t x = mix64(master_seed ^ fnv1a64(label));
  x = mix64(x ^ index);
  return RngStream(x);
}

}  // namespace qsdc
