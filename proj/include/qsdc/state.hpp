#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsdc/pauli.hpp"

namespace qsdc {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kPhaseTolerance = 1e-9;

/// Normalized amplitude vector over `num_qubits` labeled qubits.
/// Qubit 1 is the most significant bit of the amplitude index, so the basis
/// label reads left to right exactly like the particle numbering 1..n.
/// States are immutable values: every operation returns a fresh state.
template <typename Real = double>
struct PureStateT {
  using Complex = std::complex<Real>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  int num_qubits = 0;
  Vector amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }

  Real norm_sq() const { return amplitudes.squaredNorm(); }

  /// Bit of basis index `idx` that belongs to 1-based qubit `q`.
  int bit_of(Eigen::Index idx, int q) const {
    return static_cast<int>((idx >> (num_qubits - q)) & 1);
  }
};

using PureState = PureStateT<double>;

template <typename Real>
void check_qubit_index(const PureStateT<Real>& s, int q) {
  if (q < 1 || q > s.num_qubits) {
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " out of range 1.." + std::to_string(s.num_qubits));
  }
}

template <typename Real>
PureStateT<Real> normalized(PureStateT<Real> s) {
  Real n = std::sqrt(s.norm_sq());
  if (n <= 0) throw std::invalid_argument("cannot normalize a zero state");
  s.amplitudes /= n;
  return s;
}

template <typename Real = double>
PureStateT<Real> make_state(int num_qubits,
                            typename PureStateT<Real>::Vector amplitudes) {
  if (num_qubits < 1) throw std::invalid_argument("num_qubits must be positive");
  if (amplitudes.size() != (Eigen::Index{1} << num_qubits)) {
    throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
  }
  PureStateT<Real> s{num_qubits, std::move(amplitudes)};
  if (std::abs(s.norm_sq() - Real(1)) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
  return s;
}

template <typename Real = double>
PureStateT<Real> make_basis_state(int num_qubits, const std::vector<int>& bits) {
  if (num_qubits < 1) throw std::invalid_argument("num_qubits must be positive");
  if (static_cast<int>(bits.size()) != num_qubits) {
    throw std::invalid_argument("bit sequence length must equal num_qubits");
  }
  Eigen::Index idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bits must be 0 or 1");
    idx = (idx << 1) | b;
  }
  typename PureStateT<Real>::Vector amps =
      PureStateT<Real>::Vector::Zero(Eigen::Index{1} << num_qubits);
  amps[idx] = Real(1);
  return PureStateT<Real>{num_qubits, std::move(amps)};
}

template <typename Real = double>
PureStateT<Real> make_basis_state(std::string_view bits) {
  std::vector<int> v;
  v.reserve(bits.size());
  for (char c : bits) v.push_back(c - '0');
  return make_basis_state<Real>(static_cast<int>(bits.size()), v);
}

/// (|0...0> + |1...1>)/sqrt(2) over `num_qubits` qubits.
template <typename Real = double>
PureStateT<Real> make_ghz(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("GHZ state needs at least 2 qubits");
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  typename PureStateT<Real>::Vector amps = PureStateT<Real>::Vector::Zero(dim);
  const Real r = Real(1) / std::sqrt(Real(2));
  amps[0] = r;
  amps[dim - 1] = r;
  return PureStateT<Real>{num_qubits, std::move(amps)};
}

/// Kronecker product; a's qubits keep the leading labels.
template <typename Real>
PureStateT<Real> tensor(const PureStateT<Real>& a, const PureStateT<Real>& b) {
  PureStateT<Real> out;
  out.num_qubits = a.num_qubits + b.num_qubits;
  out.amplitudes.resize(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    out.amplitudes.segment(i * b.dim(), b.dim()) = a.amplitudes[i] * b.amplitudes;
  }
  return out;
}

template <typename Real>
std::complex<Real> inner_product(const PureStateT<Real>& a, const PureStateT<Real>& b) {
  if (a.num_qubits != b.num_qubits) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  return a.amplitudes.dot(b.amplitudes);  // Eigen's dot conjugates the left side
}

template <typename Real>
PureStateT<Real> apply_single_qubit(const PureStateT<Real>& s, int qubit, PauliLabel op) {
  check_qubit_index(s, qubit);
  const auto m = pauli_matrix<Real>(op);
  const Eigen::Index stride = Eigen::Index{1} << (s.num_qubits - qubit);
  PureStateT<Real> out = s;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if (i & stride) continue;
    const auto a0 = s.amplitudes[i];
    const auto a1 = s.amplitudes[i | stride];
    out.amplitudes[i] = m(0, 0) * a0 + m(0, 1) * a1;
    out.amplitudes[i | stride] = m(1, 0) * a0 + m(1, 1) * a1;
  }
  return out;
}

/// Applies a 4x4 matrix on (qubit1, qubit2); row/column index is
/// 2*bit(qubit1) + bit(qubit2).
template <typename Real>
PureStateT<Real> apply_two_qubit(const PureStateT<Real>& s, int qubit1, int qubit2,
                                 const Eigen::Matrix<std::complex<Real>, 4, 4>& m) {
  check_qubit_index(s, qubit1);
  check_qubit_index(s, qubit2);
  if (qubit1 == qubit2) throw std::invalid_argument("two-qubit op needs distinct qubits");
  const Eigen::Index m1 = Eigen::Index{1} << (s.num_qubits - qubit1);
  const Eigen::Index m2 = Eigen::Index{1} << (s.num_qubits - qubit2);
  PureStateT<Real> out = s;
  Eigen::Matrix<std::complex<Real>, 4, 1> sub;
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    if ((i & m1) || (i & m2)) continue;
    sub << s.amplitudes[i], s.amplitudes[i | m2], s.amplitudes[i | m1],
        s.amplitudes[i | m1 | m2];
    sub = (m * sub).eval();
    out.amplitudes[i] = sub[0];
    out.amplitudes[i | m2] = sub[1];
    out.amplitudes[i | m1] = sub[2];
    out.amplitudes[i | m1 | m2] = sub[3];
  }
  return out;
}

/// Relabels qubits: new qubit slot s holds what old qubit perm[s-1] held.
/// perm must be a permutation of 1..n.
template <typename Real>
PureStateT<Real> permute_qubits(const PureStateT<Real>& s, const std::vector<int>& perm) {
  const int n = s.num_qubits;
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation length must equal num_qubits");
  }
  std::vector<char> seen(n + 1, 0);
  for (int q : perm) {
    if (q < 1 || q > n || seen[q]) throw std::invalid_argument("not a permutation of 1..n");
    seen[q] = 1;
  }
  PureStateT<Real> out;
  out.num_qubits = n;
  out.amplitudes.resize(s.dim());
  for (Eigen::Index i = 0; i < s.dim(); ++i) {
    Eigen::Index j = 0;
    for (int slot = 1; slot <= n; ++slot) {
      j = (j << 1) | s.bit_of(i, perm[slot - 1]);
    }
    out.amplitudes[j] = s.amplitudes[i];
  }
  return out;
}

template <typename Real>
bool approx_equal(const PureStateT<Real>& a, const PureStateT<Real>& b,
                  Real tol = Real(kNormTolerance)) {
  if (a.num_qubits != b.num_qubits) return false;
  return (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff() <= tol;
}

/// True when a = exp(i*phi) * b for some phase phi.
template <typename Real>
bool equal_up_to_global_phase(const PureStateT<Real>& a, const PureStateT<Real>& b,
                              Real tol = Real(kPhaseTolerance)) {
  if (a.num_qubits != b.num_qubits) return false;
  const std::complex<Real> overlap = inner_product(a, b);
  return std::abs(std::abs(overlap) - Real(1)) <= tol;
}

}  // namespace qsdc
