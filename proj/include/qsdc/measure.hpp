#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "qsdc/bell.hpp"
#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

/// Amplitude of |b1 b2> inside the given Bell state; the table behind every
/// projection below.
template <typename Real = double>
Real bell_amplitude(BellOutcome o, int b1, int b2) {
  const Real r = Real(1) / std::sqrt(Real(2));
  if (o.type_bit == 0) {  // Phi: |00> +- |11>
    if (b1 != b2) return Real(0);
    return (b1 == 0) ? r : (o.sign_bit ? -r : r);
  }
  // Psi: |01> +- |10>
  if (b1 == b2) return Real(0);
  return (b1 == 0) ? r : (o.sign_bit ? -r : r);
}

template <typename Real = double>
PureStateT<Real> bell_pair_state(BellOutcome o) {
  typename PureStateT<Real>::Vector amps = PureStateT<Real>::Vector::Zero(4);
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      amps[b1 * 2 + b2] = bell_amplitude<Real>(o, b1, b2);
    }
  }
  return PureStateT<Real>{2, std::move(amps)};
}

namespace detail {
template <typename Real>
void check_pair(const PureStateT<Real>& s, int q1, int q2) {
  check_qubit_index(s, q1);
  check_qubit_index(s, q2);
  if (q1 == q2) throw std::invalid_argument("Bell measurement needs two distinct qubits");
}
}  // namespace detail

template <typename Real>
struct BellProjection {
  Real probability = 0;
  std::optional<PureStateT<Real>> collapsed;
};

/// Projects (qubit1, qubit2) onto the given Bell state. The collapsed state is
/// renormalized; it is absent when the branch has zero weight.
template <typename Real>
BellProjection<Real> bell_project(const PureStateT<Real>& s, int qubit1, int qubit2,
                                  BellOutcome outcome) {
  detail::check_pair(s, qubit1, qubit2);
  const Eigen::Index m1 = Eigen::Index{1} << (s.num_qubits - qubit1);
  const Eigen::Index m2 = Eigen::Index{1} << (s.num_qubits - qubit2);
  std::array<Real, 4> bell{};
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b2 = 0; b2 < 2; ++b2) {
      bell[b1 * 2 + b2] = bell_amplitude<Real>(outcome, b1, b2);
    }
  }

  PureStateT<Real> proj;
  proj.num_qubits = s.num_qubits;
  proj.amplitudes = PureStateT<Real>::Vector::Zero(s.dim());
  Real prob = 0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if ((i & m1) || (i & m2)) continue;
    // Overlap of the pair's 4 amplitudes with the Bell vector, rest bits fixed.
    const std::complex<Real> c = bell[0] * s.amplitudes[i] + bell[1] * s.amplitudes[i | m2] +
                                 bell[2] * s.amplitudes[i | m1] +
                                 bell[3] * s.amplitudes[i | m1 | m2];
    prob += std::norm(c);
    proj.amplitudes[i] = bell[0] * c;
    proj.amplitudes[i | m2] = bell[1] * c;
    proj.amplitudes[i | m1] = bell[2] * c;
    proj.amplitudes[i | m1 | m2] = bell[3] * c;
  }

  BellProjection<Real> result;
  result.probability = prob;
  if (prob > Real(1e-18)) {
    proj.amplitudes /= std::sqrt(prob);
    result.collapsed = std::move(proj);
  }
  return result;
}

template <typename Real>
std::array<Real, 4> bell_probabilities(const PureStateT<Real>& s, int qubit1, int qubit2) {
  std::array<Real, 4> p{};
  for (int k = 0; k < 4; ++k) {
    p[k] = bell_project(s, qubit1, qubit2, BellOutcome::from_index(k)).probability;
  }
  return p;
}

template <typename Real>
struct BellMeasurement {
  BellOutcome outcome;
  PureStateT<Real> collapsed;
};

/// Projective Bell measurement with Born-rule sampling from `rng`.
template <typename Real>
BellMeasurement<Real> measure_bell(const PureStateT<Real>& s, int qubit1, int qubit2,
                                   RngStream& rng) {
  detail::check_pair(s, qubit1, qubit2);
  const std::array<Real, 4> p = bell_probabilities(s, qubit1, qubit2);
  std::uniform_real_distribution<Real> dist(Real(0), Real(1));
  const Real u = dist(rng);
  Real cum = 0;
  int pick = -1;
  for (int k = 0; k < 4; ++k) {
    cum += p[k];
    if (u < cum && p[k] > Real(1e-18)) {
      pick = k;
      break;
    }
  }
  if (pick < 0) {  // u landed in rounding slack; take the heaviest branch
    pick = 0;
    for (int k = 1; k < 4; ++k) {
      if (p[k] > p[pick]) pick = k;
    }
  }
  const BellOutcome outcome = BellOutcome::from_index(pick);
  auto proj = bell_project(s, qubit1, qubit2, outcome);
  return BellMeasurement<Real>{outcome, std::move(*proj.collapsed)};
}

template <typename Real>
struct QubitMeasurement {
  int bit = 0;
  PureStateT<Real> collapsed;
};

/// Computational-basis measurement of a single qubit (used by the
/// intercept-resend eavesdropper).
template <typename Real>
QubitMeasurement<Real> measure_qubit(const PureStateT<Real>& s, int qubit, RngStream& rng) {
  check_qubit_index(s, qubit);
  const Eigen::Index m = Eigen::Index{1} << (s.num_qubits - qubit);
  Real p1 = 0;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (i & m) p1 += std::norm(s.amplitudes[i]);
  }
  std::uniform_real_distribution<Real> dist(Real(0), Real(1));
  int bit = dist(rng) < p1 ? 1 : 0;
  if (p1 <= Real(1e-18)) bit = 0;
  if (p1 >= Real(1) - Real(1e-18)) bit = 1;

  PureStateT<Real> out = s;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (static_cast<int>((i & m) != 0) != bit) out.amplitudes[i] = std::complex<Real>(0);
  }
  const Real keep = bit ? p1 : Real(1) - p1;
  out.amplitudes /= std::sqrt(keep);
  return QubitMeasurement<Real>{bit, std::move(out)};
}

}  // namespace qsdc
