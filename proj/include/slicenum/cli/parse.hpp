#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/exactmath/laurent_poly.hpp"
#include "slicenum/intlat/int_matrix.hpp"
#include "slicenum/linkform/linking_form.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace slicenum::cli {

// Signed terms `c`, `c*t^e`, `ct^e`, `t^e`, `t`; integer c and e, negative
// exponents allowed, whitespace ignored.  SyntaxError carries the 0-based
// character offset.
LaurentPoly parse_polynomial(std::string_view s);

// Canonical text: descending exponents, unit coefficients omitted, "0" for
// the zero polynomial, e.g. "4t^2 - 7t + 4" or "4t - 7 + 4t^-1".
std::string format_polynomial(const LaurentPoly &p);

// One row of whitespace-separated integers per line; blank lines and lines
// whose first non-blank character is '#' are skipped.  SyntaxError carries
// the 1-based line number.
IntMatrix parse_matrix(std::string_view s);
IntMatrix read_matrix_file(const std::string &path);

// "num/den" or "num".
Fraction parse_fraction(std::string_view s);

// "a,b,c".
std::vector<std::int64_t> parse_int_list(std::string_view s);

// Rows separated by ';', entries by ',' or blanks, each a fraction; values
// are reduced mod 1 by the LinkingForm constructor.
std::vector<std::vector<Fraction>> parse_gram(std::string_view s);

std::string format_element(const Element &x);

} // namespace slicenum::cli
