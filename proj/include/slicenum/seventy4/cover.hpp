#pragma once

#include "slicenum/exactmath/laurent_poly.hpp"
#include "slicenum/exactmath/poly_matrix.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace slicenum {

// 4t - 7 + 4t^-1.
LaurentPoly delta_74_symmetric();
// 4t^2 - 7t + 4.
LaurentPoly delta_74();

// Unknown data of the Z[t, t^-1] presentation of the infinite cyclic cover
// of a knot J one crossing change away from 7_4: f records self-linking of
// the lifts of the crossing circle, g its linking with the surgery curve.
class CoverPresentation {
  public:
    // Throws DomainError unless f = conjugate(f), f(1) = +-1 and g(1) = 0.
    CoverPresentation(LaurentPoly f, LaurentPoly g);

    const LaurentPoly &f() const { return f_; }
    const LaurentPoly &g() const { return g_; }

  private:
    LaurentPoly f_;
    LaurentPoly g_;
};

// [[-2t + 3 - 2t^-1, 1, g], [1, -2, 0], [g(t^-1), 0, f]].
PolyMatrix build_cover_matrix(const CoverPresentation &cp);

// det A == f * (4t - 7 + 4t^-1) + 2 g g(t^-1), exactly.
bool det_identity_check(const CoverPresentation &cp);

struct ParityCheck {
    BigInt even;
    BigInt odd;
    bool passes;
};

// Sums of even- and odd-index coefficients of (t - 1)(4t^2 - 7t + 4) h, and
// whether they equal -15 h(-1) and 15 h(-1).
ParityCheck theorem2_parity_check(const LaurentPoly &h);

// Linking numbers of the lifts K_0, S_i in the n-fold cyclic cover: the
// coefficients of g in Z[t]/(t^n - 1).
std::vector<BigInt> cover_linking_coefficients(const LaurentPoly &g, std::int64_t n);

// Seeded samples for the randomized identity checks.
LaurentPoly random_symmetric_unit_at_one(std::mt19937_64 &rng, int max_degree);
LaurentPoly random_vanishing_at_one(std::mt19937_64 &rng, int max_degree);
LaurentPoly random_laurent(std::mt19937_64 &rng, int max_degree, long coeff_bound = 9);

} // namespace slicenum
