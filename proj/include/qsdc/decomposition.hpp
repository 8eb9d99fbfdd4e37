#pragma once

#include <utility>
#include <vector>

#include "qsdc/bell.hpp"
#include "qsdc/measure.hpp"
#include "qsdc/state.hpp"

namespace qsdc {

/// Expansion of a state in a product-of-Bell-pairs basis for a fixed perfect
/// matching of the qubits. coefficients[bell_tuple_code(t)] is the amplitude
/// of the Bell product state t (pair order = pairing order).
template <typename Real = double>
struct PairDecompositionT {
  using Complex = std::complex<Real>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  std::vector<std::pair<int, int>> pairing;
  Vector coefficients;

  int num_pairs() const { return static_cast<int>(pairing.size()); }

  Complex coefficient(const BellTuple& t) const {
    if (static_cast<int>(t.size()) != num_pairs()) {
      throw std::invalid_argument("tuple length must equal the number of pairs");
    }
    return coefficients[bell_tuple_code(t)];
  }

  std::vector<std::pair<BellTuple, Complex>> nonzero_terms(Real tol = Real(1e-12)) const {
    std::vector<std::pair<BellTuple, Complex>> out;
    for (Eigen::Index code = 0; code < coefficients.size(); ++code) {
      if (std::abs(coefficients[code]) > tol) {
        out.emplace_back(bell_tuple_from_code(static_cast<int>(code), num_pairs()),
                         coefficients[code]);
      }
    }
    return out;
  }

  /// Rebuilds the original state from the coefficients.
  PureStateT<Real> reconstruct() const;
};

using PairDecomposition = PairDecompositionT<double>;

namespace detail {

/// Rows are the Bell bras <Phi+|, <Phi-|, <Psi+|, <Psi-| over |b1 b2>.
template <typename Real>
Eigen::Matrix<std::complex<Real>, 4, 4> bell_analysis_matrix() {
  Eigen::Matrix<std::complex<Real>, 4, 4> m;
  for (int bell = 0; bell < 4; ++bell) {
    for (int b = 0; b < 4; ++b) {
      m(bell, b) = bell_amplitude<Real>(BellOutcome::from_index(bell), b >> 1, b & 1);
    }
  }
  return m;
}

template <typename Real>
void check_perfect_matching(const PureStateT<Real>& s,
                            const std::vector<std::pair<int, int>>& pairing) {
  const int n = s.num_qubits;
  if (n % 2 != 0 || static_cast<int>(pairing.size()) != n / 2) {
    throw std::invalid_argument("pairing must cover every qubit exactly once");
  }
  std::vector<char> seen(n + 1, 0);
  for (auto [a, b] : pairing) {
    if (a < 1 || a > n || b < 1 || b > n || a == b || seen[a] || seen[b]) {
      throw std::invalid_argument("pairing is not a perfect matching of 1..n");
    }
    seen[a] = seen[b] = 1;
  }
}

inline std::vector<int> pairing_permutation(const std::vector<std::pair<int, int>>& pairing) {
  std::vector<int> perm;
  perm.reserve(2 * pairing.size());
  for (auto [a, b] : pairing) {
    perm.push_back(a);
    perm.push_back(b);
  }
  return perm;
}

}  // namespace detail

/// Change of basis into the Bell product basis of `pairing`: move each pair
/// into adjacent slots, then rotate every pair by the Bell analysis matrix.
/// The transformed amplitude at packed index c is the coefficient of the
/// Bell tuple with code c.
template <typename Real>
PairDecompositionT<Real> bell_decomposition(const PureStateT<Real>& s,
                                            const std::vector<std::pair<int, int>>& pairing) {
  detail::check_perfect_matching(s, pairing);
  PureStateT<Real> t = permute_qubits(s, detail::pairing_permutation(pairing));
  const auto analysis = detail::bell_analysis_matrix<Real>();
  for (int j = 0; j < static_cast<int>(pairing.size()); ++j) {
    t = apply_two_qubit(t, 2 * j + 1, 2 * j + 2, analysis);
  }
  return PairDecompositionT<Real>{pairing, std::move(t.amplitudes)};
}

template <typename Real>
PureStateT<Real> PairDecompositionT<Real>::reconstruct() const {
  PureStateT<Real> t;
  t.num_qubits = 2 * num_pairs();
  t.amplitudes = coefficients;
  const Eigen::Matrix<Complex, 4, 4> synthesis =
      detail::bell_analysis_matrix<Real>().adjoint();
  for (int j = 0; j < num_pairs(); ++j) {
    t = apply_two_qubit(t, 2 * j + 1, 2 * j + 2, synthesis);
  }
  // Invert the pair-gathering relabeling.
  const std::vector<int> perm = detail::pairing_permutation(pairing);
  std::vector<int> inverse(perm.size());
  for (int slot = 1; slot <= static_cast<int>(perm.size()); ++slot) {
    inverse[perm[slot - 1] - 1] = slot;
  }
  return permute_qubits(t, inverse);
}

}  // namespace qsdc
