#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsdc {

/// One of the four Bell states, carried as (type bit, sign bit).
/// type 0 = Phi = (|00> +- |11>)/sqrt(2), type 1 = Psi = (|01> +- |10>)/sqrt(2).
struct BellOutcome {
  std::uint8_t type_bit = 0;  // 0 = Phi, 1 = Psi
  std::uint8_t sign_bit = 0;  // 0 = +,   1 = -

  constexpr int index() const { return type_bit * 2 + sign_bit; }

  static constexpr BellOutcome from_index(int i) {
    return BellOutcome{static_cast<std::uint8_t>((i >> 1) & 1),
                       static_cast<std::uint8_t>(i & 1)};
  }

  constexpr BellOutcome flipped_type() const {
    return BellOutcome{static_cast<std::uint8_t>(type_bit ^ 1), sign_bit};
  }
  constexpr BellOutcome flipped_sign() const {
    return BellOutcome{type_bit, static_cast<std::uint8_t>(sign_bit ^ 1)};
  }

  auto operator<=>(const BellOutcome&) const = default;
};

inline constexpr BellOutcome kPhiPlus{0, 0};
inline constexpr BellOutcome kPhiMinus{0, 1};
inline constexpr BellOutcome kPsiPlus{1, 0};
inline constexpr BellOutcome kPsiMinus{1, 1};

/// Two-character wire token: "F+", "F-", "P+", "P-".
std::string bell_token(BellOutcome o);
BellOutcome parse_bell_token(std::string_view token);

/// Tuples of outcomes (one per sender pair) pack into a base-4 code with the
/// first entry in the most significant position.
using BellTuple = std::vector<BellOutcome>;

inline int bell_tuple_code(const BellTuple& t) {
  int code = 0;
  for (const BellOutcome& o : t) code = code * 4 + o.index();
  return code;
}

inline BellTuple bell_tuple_from_code(int code, int length) {
  BellTuple t(length);
  for (int j = length - 1; j >= 0; --j) {
    t[j] = BellOutcome::from_index(code & 3);
    code >>= 2;
  }
  return t;
}

std::string bell_tuple_token(const BellTuple& t);
BellTuple parse_bell_tuple_token(std::string_view token);

}  // namespace qsdc
