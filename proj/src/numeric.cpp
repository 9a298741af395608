#include "dedekind/numeric.hpp"

#include <stdexcept>

namespace dedekind {

Fraction make_fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("fraction with zero denominator");
  }
  if (den < 0) {
    return Fraction(BigInt(-num), BigInt(-den));
  }
  return Fraction(num, den);
}

std::string to_string(const Fraction& q) { return q.str(); }

std::string to_string(const BigInt& n) { return n.str(); }

namespace {

bool is_decimal_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) {
    return false;
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den)) {
    throw std::invalid_argument("not a decimal fraction: '" + text + "'");
  }
  const auto unsigned_part = [](const std::string& s) {
    return s[0] == '+' ? s.substr(1) : s;
  };
  return make_fraction(BigInt(unsigned_part(num)), BigInt(unsigned_part(den)));
}

}  // namespace dedekind
