#include "qsdc/noise.hpp"

#include <numeric>
#include <stdexcept>

namespace qsdc {

void NoiseModel::validate() const {
  const bool in_range = p_x >= 0 && p_x <= 1 && p_y >= 0 && p_y <= 1 && p_z >= 0 && p_z <= 1;
  if (!in_range || total() > 1.0 + 1e-15) {
    throw std::invalid_argument("noise probabilities must lie in [0,1] and sum to at most 1");
  }
}

PureState apply_pauli_noise(const PureState& state, const NoiseModel& model,
                            RngStream& rng, const std::vector<int>& targets) {
  model.validate();
  std::vector<int> qubits = targets;
  if (qubits.empty()) {
    qubits.resize(state.num_qubits);
    std::iota(qubits.begin(), qubits.end(), 1);
  }
  PureState out = state;
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int q : qubits) {
    check_qubit_index(out, q);
    const double u = dist(rng);
    if (u < model.p_x) {
      out = apply_single_qubit(out, q, PauliLabel::X);
    } else if (u < model.p_x + model.p_y) {
      out = apply_single_qubit(out, q, PauliLabel::Yp);
    } else if (u < model.total()) {
      out = apply_single_qubit(out, q, PauliLabel::Z);
    }
  }
  return out;
}

GroupRegister apply_noise(GroupRegister group, const NoiseModel& model, RngStream& rng,
                          const std::vector<int>& targets) {
  group.state = apply_pauli_noise(group.state, model, rng, targets);
  return group;
}

}  // namespace qsdc
