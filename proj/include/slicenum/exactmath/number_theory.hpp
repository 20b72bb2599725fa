#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace slicenum {

// Prime factorization by trial division, ascending primes.  n >= 1.
std::vector<std::pair<std::int64_t, int>> factor_small(std::int64_t n);

// Largest power of p dividing n, and its exponent.
std::pair<std::int64_t, int> prime_power_part(std::int64_t n, std::int64_t p);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Overflow-checked product; throws CapacityError.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

} // namespace slicenum
