#pragma once

#include "slicenum/exactmath/laurent_poly.hpp"

#include <cstddef>
#include <vector>

namespace slicenum {

// Square matrix over Z[t, t^-1].
class PolyMatrix {
  public:
    // Throws DomainError for n == 0.
    explicit PolyMatrix(std::size_t n);
    PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

    static PolyMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    LaurentPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const LaurentPoly &operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  private:
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

// Laplace expansion along the first row.  Intended for the small (n <= 4)
// matrices that appear here; cost grows as n!.
LaurentPoly determinant(const PolyMatrix &m);

} // namespace slicenum
