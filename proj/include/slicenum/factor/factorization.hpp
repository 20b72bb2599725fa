#pragma once

#include "slicenum/exactmath/laurent_poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace slicenum {

inline constexpr LaurentPoly::Exponent kMaxFactorSpan = 16;

// input = sign * t^shift * prod factor^multiplicity.  Non-constant factors
// are irreducible, primitive, start at t^0 and have positive leading
// coefficient; integer content appears as prime constant factors.
struct Factorization {
    int sign = 1;
    LaurentPoly::Exponent shift = 0;
    std::vector<std::pair<LaurentPoly, int>> factors;

    LaurentPoly expand() const;
    bool is_irreducible() const;
};

// Kronecker's method.  Throws DomainError on zero and CapacityError when the
// exponent span exceeds kMaxFactorSpan.
Factorization factor_integer_poly(const LaurentPoly &p);

// t^deg q(t^-1) with positive leading coefficient.
LaurentPoly reciprocal(const LaurentPoly &q);

// f with delta = +-t^k f(t) f(t^-1), or nullopt when no grouping of the
// irreducible factors of delta achieves it.
std::optional<LaurentPoly> fox_milnor(const LaurentPoly &delta);

} // namespace slicenum
