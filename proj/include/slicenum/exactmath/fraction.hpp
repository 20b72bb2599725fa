#pragma once

#include <gmpxx.h>

#include <string>

namespace slicenum {

using BigInt = mpz_class;

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; make_fraction canonicalizes raw num/den input.
using Fraction = mpq_class;

Fraction make_fraction(const BigInt &num, const BigInt &den);

// Representative of x mod 1 in [0, 1).
Fraction mod_one(const Fraction &x);

BigInt floor_div(const BigInt &a, const BigInt &b);
BigInt mod_floor(const BigInt &a, const BigInt &m);

bool is_perfect_square(const BigInt &n);

std::string to_string(const BigInt &n);
std::string to_string(const Fraction &x);

} // namespace slicenum
