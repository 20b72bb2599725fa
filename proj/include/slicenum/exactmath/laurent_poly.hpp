#pragma once

#include "slicenum/exactmath/fraction.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace slicenum {

// Integer Laurent polynomial sum_e c_e t^e.  Only nonzero coefficients are
// stored, so the zero polynomial is the empty map and equality is structural.
class LaurentPoly {
  public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long c); // NOLINT: constants convert implicitly
    LaurentPoly(const BigInt &c);
    LaurentPoly(std::initializer_list<std::pair<Exponent, long>> terms);

    static LaurentPoly monomial(const BigInt &c, Exponent e);
    static LaurentPoly t() { return monomial(1, 1); }
    // c[0] + c[1] t + ... shifted by t^shift.
    static LaurentPoly from_coeffs(const std::vector<BigInt> &c, Exponent shift = 0);

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    BigInt coeff(Exponent e) const;

    // Require !is_zero().
    Exponent min_exponent() const;
    Exponent max_exponent() const;
    Exponent span() const { return max_exponent() - min_exponent(); }
    const BigInt &lowest_coeff() const;
    const BigInt &leading_coeff() const;

    // Dense coefficients from min_exponent() to max_exponent().
    std::vector<BigInt> dense() const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) { return a.terms_ == b.terms_; }

    // Multiplies by t^k.
    LaurentPoly shifted(Exponent k) const;

  private:
    void add_term(Exponent e, const BigInt &c);
    Terms terms_;
};

enum class RingOp { add, sub, mul };

LaurentPoly lp_ring_op(const LaurentPoly &a, const LaurentPoly &b, RingOp which);

// t -> t^-1.
LaurentPoly conjugate(const LaurentPoly &a);

// Throws DomainError for x == 0 when a has a negative exponent.
Fraction evaluate(const LaurentPoly &a, const Fraction &x);
BigInt evaluate(const LaurentPoly &a, const BigInt &x);

// Multiplies by the unit +-t^k so that the lowest exponent is 0 and the
// lowest coefficient is positive.  Throws DomainError on zero.
LaurentPoly normalize_units(const LaurentPoly &a);

// True when a = +-t^k b for some k.
bool associated(const LaurentPoly &a, const LaurentPoly &b);

// Coefficients of a in Z[t]/(t^n - 1), index i holding the coefficient of t^i.
std::vector<BigInt> reduce_mod_tn_minus_1(const LaurentPoly &a, std::int64_t n);

struct EvenOddSums {
    BigInt even;
    BigInt odd;
};
EvenOddSums even_odd_sums(const LaurentPoly &a);

// a / b in Z[t, t^-1], or nullopt when b does not divide a.  Throws
// DomainError when b is zero.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly &a, const LaurentPoly &b);

} // namespace slicenum
