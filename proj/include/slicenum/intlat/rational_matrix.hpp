#pragma once

#include "slicenum/exactmath/fraction.hpp"
#include "slicenum/intlat/int_matrix.hpp"

#include <vector>

namespace slicenum {

using QMatrix = std::vector<std::vector<Fraction>>;

QMatrix to_rational(const IntMatrix &m);
QMatrix multiply(const QMatrix &a, const QMatrix &b);
QMatrix transpose(const QMatrix &a);

// Gauss-Jordan over Q.  Throws DomainError on a singular or non-square input.
QMatrix inverse(const QMatrix &m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Sylvester inertia of a symmetric rational matrix by symmetric elimination.
Inertia inertia(QMatrix m);

} // namespace slicenum
