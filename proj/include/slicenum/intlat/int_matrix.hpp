#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/linkform/abelian_group.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace slicenum {

// Dense row-major matrix of arbitrary-precision integers, at least 1x1.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transpose() const;

    friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b);
    friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b);
    friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string to_string() const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

IntMatrix direct_sum(const IntMatrix &a, const IntMatrix &b);

// Fraction-free (Bareiss) elimination.  Throws DomainError if not square.
BigInt determinant(const IntMatrix &m);

struct SNFResult {
    // Diagonal of U*M*V, length min(rows, cols), nonnegative, each entry
    // dividing the next; zeros trail.
    std::vector<BigInt> d;
    IntMatrix u;
    IntMatrix v;
};

SNFResult smith_normal_form(const IntMatrix &m);

// Z^rows / M Z^cols.  Unit invariant factors are dropped.  Throws
// InfiniteCokernel when the free rank is positive.
FiniteAbelianGroup cokernel_group(const IntMatrix &m);

} // namespace slicenum
