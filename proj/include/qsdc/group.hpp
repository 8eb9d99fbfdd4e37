#pragma once

#include <cstdint>
#include <vector>

#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

constexpr int kMinSenders = 2;
constexpr int kMaxSenders = 6;

/// Party ids: 0 is the receiver, 1..M are the senders.
constexpr int kReceiverParty = 0;

/// One protocol group: two (M+1)-particle GHZ registers joined into a single
/// 2(M+1)-qubit pure state. Sender k owns particles k and k+M+1; the receiver
/// owns particles M+1 and 2(M+1).
struct GroupRegister {
  std::int64_t group_id = 0;
  int num_senders = 0;  // M
  PureState state;
  bool consumed = false;  // sacrificed to channel verification

  int particles_per_register() const { return num_senders + 1; }
  int num_particles() const { return 2 * (num_senders + 1); }

  /// Particle indices of one party's Bell pair (first register, second register).
  std::pair<int, int> pair_of_party(int party) const {
    const int k = party == kReceiverParty ? num_senders + 1 : party;
    return {k, k + num_senders + 1};
  }

  int owner_of_particle(int particle) const {
    const int k = (particle - 1) % (num_senders + 1) + 1;
    return k == num_senders + 1 ? kReceiverParty : k;
  }
};

/// Prepares N groups of GHZ(M+1) x GHZ(M+1). The 2N registers are paired up
/// by a seeded shuffle before grouping.
std::vector<GroupRegister> distribute(std::int64_t num_groups, int num_senders,
                                      RngStream& rng);

}  // namespace qsdc
