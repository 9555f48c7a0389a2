#include "permhom/arithmetic.hpp"

#include <stdexcept>
#include <string>

namespace permhom {

Rational harmonic(int m) {
  if (m < 0) throw std::invalid_argument("harmonic number of negative index");
  Rational h = 0;
  for (int i = 1; i <= m; ++i) h += Rational(1, i);
  return h;
}

Integer lcm_upto(int m) {
  if (m < 1) throw std::invalid_argument("lcm_upto needs m >= 1");
  Integer l = 1;
  for (int i = 2; i <= m; ++i) l = boost::multiprecision::lcm(l, Integer(i));
  return l;
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= v; d += 2)
    if (v % d == 0) return false;
  return true;
}

}  // namespace permhom
