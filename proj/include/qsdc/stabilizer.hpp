#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsdc/rng.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

enum class StabPauli : std::uint8_t { I = 0, X = 1, Z = 2 };

/// Pauli string over {I, X, Z}, one entry per qubit of a register. The ideal
/// GHZ channel is a simultaneous +1 eigenvector of the n strings returned by
/// ghz_stabilizers.
struct StabilizerOperator {
  std::vector<StabPauli> pattern;

  int length() const { return static_cast<int>(pattern.size()); }

  std::string token() const {
    std::string s;
    for (StabPauli p : pattern) {
      s += p == StabPauli::I ? 'I' : (p == StabPauli::X ? 'X' : 'Z');
    }
    return s;
  }
};

/// S_1 = X...X; S_k (k >= 2) has Z at positions 1 and k.
inline std::vector<StabilizerOperator> ghz_stabilizers(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("GHZ stabilizers need >= 2 qubits");
  std::vector<StabilizerOperator> out;
  out.reserve(num_qubits);
  out.push_back({std::vector<StabPauli>(num_qubits, StabPauli::X)});
  for (int k = 2; k <= num_qubits; ++k) {
    StabilizerOperator s{std::vector<StabPauli>(num_qubits, StabPauli::I)};
    s.pattern[0] = StabPauli::Z;
    s.pattern[k - 1] = StabPauli::Z;
    out.push_back(std::move(s));
  }
  return out;
}

namespace detail {
// An I/X/Z string acts as S|i> = (-1)^{parity(z_mask & i)} |i ^ x_mask>.
struct StabMasks {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
};

template <typename Real>
StabMasks stabilizer_masks(const PureStateT<Real>& s, const StabilizerOperator& op) {
  if (op.length() != s.num_qubits) {
    throw std::invalid_argument("stabilizer pattern length must equal num_qubits");
  }
  StabMasks m;
  for (int q = 1; q <= s.num_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (s.num_qubits - q);
    if (op.pattern[q - 1] == StabPauli::X) m.x_mask |= bit;
    if (op.pattern[q - 1] == StabPauli::Z) m.z_mask |= bit;
  }
  return m;
}

inline int parity64(std::uint64_t v) { return __builtin_parityll(v); }
}  // namespace detail

template <typename Real>
PureStateT<Real> apply_stabilizer(const PureStateT<Real>& s, const StabilizerOperator& op) {
  const auto m = detail::stabilizer_masks(s, op);
  PureStateT<Real> out = s;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const Real sign = detail::parity64(static_cast<std::uint64_t>(i) & m.z_mask) ? -1 : 1;
    out.amplitudes[static_cast<Eigen::Index>(i ^ static_cast<Eigen::Index>(m.x_mask))] =
        sign * s.amplitudes[i];
  }
  return out;
}

/// <state|S|state>. The result of an I/X/Z string on any state is real up to
/// rounding; the imaginary part is checked against 1e-12.
template <typename Real>
Real stabilizer_expectation(const PureStateT<Real>& s, const StabilizerOperator& op) {
  const auto m = detail::stabilizer_masks(s, op);
  std::complex<Real> acc(0);
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    const Real sign = detail::parity64(static_cast<std::uint64_t>(i) & m.z_mask) ? -1 : 1;
    acc += std::conj(s.amplitudes[static_cast<Eigen::Index>(
               i ^ static_cast<Eigen::Index>(m.x_mask))]) *
           sign * s.amplitudes[i];
  }
  if (std::abs(acc.imag()) >= Real(1e-12)) {
    throw std::logic_error("stabilizer expectation has a non-real component");
  }
  return acc.real();
}

template <typename Real>
struct StabilizerMeasurement {
  int eigenvalue = +1;  // +1 or -1
  PureStateT<Real> collapsed;
};

/// Projective measurement of the +-1 observable S via P(+-) = (I +- S)/2.
template <typename Real>
StabilizerMeasurement<Real> measure_stabilizer(const PureStateT<Real>& s,
                                               const StabilizerOperator& op,
                                               RngStream& rng) {
  const Real expectation = stabilizer_expectation(s, op);
  Real p_plus = (Real(1) + expectation) / Real(2);
  if (p_plus < 0) p_plus = 0;
  if (p_plus > 1) p_plus = 1;
  std::uniform_real_distribution<Real> dist(Real(0), Real(1));
  int eig = dist(rng) < p_plus ? +1 : -1;
  if (p_plus <= Real(1e-18)) eig = -1;
  if (p_plus >= Real(1) - Real(1e-18)) eig = +1;

  PureStateT<Real> branch = apply_stabilizer(s, op);
  branch.amplitudes = s.amplitudes + Real(eig) * branch.amplitudes;
  branch.amplitudes /= std::sqrt(branch.norm_sq());
  return StabilizerMeasurement<Real>{eig, std::move(branch)};
}

}  // namespace qsdc
