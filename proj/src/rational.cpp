#include "permhom/rational.hpp"

#include <stdexcept>

namespace permhom {

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  return Integer(std::string(text.front() == '+' ? text.substr(1) : text));
}

}  // namespace

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace permhom
