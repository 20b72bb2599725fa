#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/linkform/linking_form.hpp"

#include <cstdint>
#include <vector>

namespace slicenum {

// a1 - 1/(a2 - 1/(... - 1/an)).  Throws DomainError on an empty list or when
// a partial denominator vanishes.
Fraction cf_to_fraction(const std::vector<std::int64_t> &terms);

// p/q surgery on the unknot: Z/p with generator self-linking q/p.  Throws
// DomainError unless p >= 2 and gcd(p, q) = 1.
LinkingForm lens_linking_form(std::int64_t p, std::int64_t q);

} // namespace slicenum
