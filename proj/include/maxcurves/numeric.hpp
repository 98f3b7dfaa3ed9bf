#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxcurves/errors.hpp"

namespace maxcurves {

bool is_prime(std::uint64_t value);

/// Prime factorization by trial division, returned as (prime, multiplicity)
/// pairs in ascending prime order.  Intended for desk-scale inputs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t value);

/// base^exponent with overflow detection.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);

}  // namespace maxcurves
