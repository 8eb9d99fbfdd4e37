#include "qsdc/pauli.hpp"

namespace qsdc {

std::string pauli_token(PauliLabel op) {
  switch (op) {
    case PauliLabel::I:
      return "I";
    case PauliLabel::X:
      return "X";
    case PauliLabel::Yp:
      return "iY";
    case PauliLabel::Z:
      return "Z";
  }
  throw std::invalid_argument("unknown PauliLabel");
}

PauliLabel parse_pauli_token(std::string_view token) {
  if (token == "I") return PauliLabel::I;
  if (token == "X") return PauliLabel::X;
  if (token == "iY") return PauliLabel::Yp;
  if (token == "Z") return PauliLabel::Z;
  throw std::invalid_argument("bad Pauli token: " + std::string(token));
}

}  // namespace qsdc
