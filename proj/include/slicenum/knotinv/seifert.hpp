#pragma once

#include "slicenum/exactmath/laurent_poly.hpp"
#include "slicenum/intlat/int_matrix.hpp"
#include "slicenum/linkform/linking_form.hpp"

namespace slicenum {

// Seifert matrix of a knot: square, even-dimensional, det(V - V^T) = +-1.
class SeifertMatrix {
  public:
    // Throws DomainError when the matrix does not present a knot.
    explicit SeifertMatrix(IntMatrix v);

    const IntMatrix &matrix() const { return v_; }
    std::size_t genus() const { return v_.rows() / 2; }
    // V + V^T; presents H1 of the double branched cover.
    IntMatrix symmetrized() const;

  private:
    IntMatrix v_;
};

SeifertMatrix direct_sum(const SeifertMatrix &a, const SeifertMatrix &b);

// det(V - t V^T), normalized up to +-t^k.
LaurentPoly alexander_polynomial(const SeifertMatrix &s);

// |det(V + V^T)| = |Alexander(-1)|.
BigInt knot_determinant(const SeifertMatrix &s);

// Signature of V + V^T; positive definite counts as positive.
int knot_signature(const SeifertMatrix &s);

FiniteAbelianGroup branched_cover_homology(const SeifertMatrix &s);

// beta([x], [y]) = x^T (V + V^T)^{-1} y mod 1, written in the generators of
// the Smith-normal-form decomposition of coker(V + V^T).  Throws
// DomainError when V + V^T is singular.
LinkingForm branched_cover_linking_form(const SeifertMatrix &s);

} // namespace slicenum
