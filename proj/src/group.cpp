#include "qsdc/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsdc {

std::vector<GroupRegister> distribute(std::int64_t num_groups, int num_senders,
                                      RngStream& rng) {
  if (num_groups < 1) throw std::invalid_argument("need at least one group");
  if (num_senders < kMinSenders || num_senders > kMaxSenders) {
    throw std::invalid_argument("sender count must be in 2..6");
  }
  // The 2N prepared registers are identical GHZ states; the shuffle fixes
  // which physical register ends up in which half of which group.
  std::vector<int> order(2 * static_cast<std::size_t>(num_groups));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  const PureState half = make_ghz(num_senders + 1);
  const PureState joint = tensor(half, half);
  std::vector<GroupRegister> groups;
  groups.reserve(num_groups);
  for (std::int64_t g = 0; g < num_groups; ++g) {
    groups.push_back(GroupRegister{g, num_senders, joint, false});
  }
  return groups;
}

}  // namespace qsdc
