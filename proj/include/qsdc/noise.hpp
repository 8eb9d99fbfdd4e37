#pragma once

#include <vector>

#include "qsdc/group.hpp"
#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

/// Independent per-qubit Pauli channel: each distributed particle suffers
/// X, Y or Z with the given probabilities (at most one of them per qubit).
struct NoiseModel {
  double p_x = 0;
  double p_y = 0;
  double p_z = 0;

  bool is_identity() const { return p_x == 0 && p_y == 0 && p_z == 0; }
  double total() const { return p_x + p_y + p_z; }
  void validate() const;

  NoiseModel scaled(double factor) const { return {p_x * factor, p_y * factor, p_z * factor}; }
};

/// One trajectory of the Pauli channel over the listed qubits (all qubits
/// when `targets` is empty).
PureState apply_pauli_noise(const PureState& state, const NoiseModel& model,
                            RngStream& rng, const std::vector<int>& targets = {});

GroupRegister apply_noise(GroupRegister group, const NoiseModel& model, RngStream& rng,
                          const std::vector<int>& targets = {});

}  // namespace qsdc
