#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsdc {

/// The operation alphabet of the senders. Yp is i*sigma_y = |0><1| - |1><0|,
/// the matrix the protocol assigns to the two-bit value 10; it differs from
/// sigma_y only by a global phase.
enum class PauliLabel : std::uint8_t { I = 0, X = 1, Yp = 2, Z = 3 };

template <typename Real = double>
Eigen::Matrix<std::complex<Real>, 2, 2> pauli_matrix(PauliLabel op) {
  using C = std::complex<Real>;
  Eigen::Matrix<C, 2, 2> m;
  switch (op) {
    case PauliLabel::I:
      m << C(1), C(0), C(0), C(1);
      break;
    case PauliLabel::X:
      m << C(0), C(1), C(1), C(0);
      break;
    case PauliLabel::Yp:
      m << C(0), C(1), C(-1), C(0);
      break;
    case PauliLabel::Z:
      m << C(1), C(0), C(0), C(-1);
      break;
    default:
      throw std::invalid_argument("unknown PauliLabel");
  }
  return m;
}

std::string pauli_token(PauliLabel op);
PauliLabel parse_pauli_token(std::string_view token);

}  // namespace qsdc
