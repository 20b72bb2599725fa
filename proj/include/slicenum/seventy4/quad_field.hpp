#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/exactmath/laurent_poly.hpp"

#include <string>

namespace slicenum {

// (a + b sqrt(-15)) / c in lowest terms: c > 0 and gcd(a, b, c) = 1.
class QuadFieldElement {
  public:
    QuadFieldElement() : a_(0), b_(0), c_(1) {}
    QuadFieldElement(BigInt a, BigInt b, BigInt c);
    static QuadFieldElement rational(const Fraction &x);

    const BigInt &a() const { return a_; }
    const BigInt &b() const { return b_; }
    const BigInt &c() const { return c_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadFieldElement conjugate() const;
    // Throws DomainError on zero.
    QuadFieldElement inverse() const;

    friend QuadFieldElement operator+(const QuadFieldElement &x, const QuadFieldElement &y);
    friend QuadFieldElement operator-(const QuadFieldElement &x, const QuadFieldElement &y);
    friend QuadFieldElement operator*(const QuadFieldElement &x, const QuadFieldElement &y);
    friend bool operator==(const QuadFieldElement &x, const QuadFieldElement &y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    std::string to_string() const;

  private:
    BigInt a_, b_, c_;
};

// (a^2 + 15 b^2) / c^2.
Fraction quadfield_norm(const QuadFieldElement &x);

// Image of t under Z[t, t^-1]/(4t - 7 + 4t^-1) -> Q(sqrt(-15)): the root
// (7 + sqrt(-15)) / 8 of 4t^2 - 7t + 4.
QuadFieldElement phi_root();

QuadFieldElement phi_embed(const LaurentPoly &p);

// Value of 4x^2 - 7x + 4 at x = (7 + sqrt(-15)) / 4.  Nonzero: the quarter
// is not a root, so the embedding uses the eighth.
QuadFieldElement quarter_value_check();

} // namespace slicenum
