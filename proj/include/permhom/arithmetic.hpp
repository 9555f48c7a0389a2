#pragma once

#include <cstdint>

#include "permhom/rational.hpp"

namespace permhom {

/// H_m = 1 + 1/2 + ... + 1/m; harmonic(0) = 0.
Rational harmonic(int m);

/// lcm{1, ..., m} for m >= 1.
Integer lcm_upto(int m);

/// Deterministic trial division. Values here are at most n^2 + 1.
bool is_prime(std::int64_t v);

}  // namespace permhom
