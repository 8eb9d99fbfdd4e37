#include "qsdc/bell.hpp"

namespace qsdc {

std::string bell_token(BellOutcome o) {
  std::string s(2, '?');
  s[0] = o.type_bit ? 'P' : 'F';
  s[1] = o.sign_bit ? '-' : '+';
  return s;
}

BellOutcome parse_bell_token(std::string_view token) {
  if (token.size() != 2 || (token[0] != 'F' && token[0] != 'P') ||
      (token[1] != '+' && token[1] != '-')) {
    throw std::invalid_argument("bad Bell outcome token: " + std::string(token));
  }
  return BellOutcome{static_cast<std::uint8_t>(token[0] == 'P'),
                     static_cast<std::uint8_t>(token[1] == '-')};
}

std::string bell_tuple_token(const BellTuple& t) {
  std::string s;
  s.reserve(2 * t.size());
  for (const BellOutcome& o : t) s += bell_token(o);
  return s;
}

BellTuple parse_bell_tuple_token(std::string_view token) {
  if (token.size() % 2 != 0) {
    throw std::invalid_argument("bad Bell tuple token: " + std::string(token));
  }
  BellTuple t;
  t.reserve(token.size() / 2);
  for (std::size_t i = 0; i < token.size(); i += 2) {
    t.push_back(parse_bell_token(token.substr(i, 2)));
  }
  return t;
}

}  // namespace qsdc
