#include "qsdc/adversary.hpp"

#include "qsdc/measure.hpp"

namespace qsdc {

GroupRegister intercept_resend(GroupRegister group, const std::vector<int>& target_qubits,
                               RngStream& rng) {
  for (int q : target_qubits) {
    auto measured = measure_qubit(group.state, q, rng);
    group.state = std::move(measured.collapsed);
  }
  return group;
}

}  // namespace qsdc
