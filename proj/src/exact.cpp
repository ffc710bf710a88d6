#include "octic/exact.hpp"

namespace octic {

namespace {

BigInt parse_big(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("bare sign is not an integer");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("bad integer literal '" + text + "'");
  }
  return BigInt(text, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_big(text), 1);
  BigInt num = parse_big(text.substr(0, slash));
  BigInt den = parse_big(text.substr(slash + 1));
  return Rational(std::move(num), std::move(den));
}

}  // namespace octic
