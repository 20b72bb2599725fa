#include "slicenum/knotinv/seifert.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/intlat/rational_matrix.hpp"

namespace slicenum {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (!v_.is_square() || v_.rows() % 2 != 0)
        throw DomainError("a Seifert matrix must be square of even dimension");
    const BigInt d = determinant(v_ - v_.transpose());
    if (abs(d) != 1)
        throw DomainError("det(V - V^T) = " + d.get_str() + "; a knot needs +-1");
}

IntMatrix SeifertMatrix::symmetrized() const { return v_ + v_.transpose(); }

SeifertMatrix direct_sum(const SeifertMatrix &a, const SeifertMatrix &b) {
    return SeifertMatrix(direct_sum(a.matrix(), b.matrix()));
}

LaurentPoly alexander_polynomial(const SeifertMatrix &s) {
    // det(V - t V^T) has degree <= n: sample it at t = 0..n and recover the
    // coefficients by Newton interpolation.
    const IntMatrix &v = s.matrix();
    const IntMatrix vt = v.transpose();
    const std::size_t n = v.rows();
    std::vector<Fraction> dd(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        IntMatrix m = v;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) -= static_cast<long>(k) * vt(i, j);
        dd[k] = determinant(m);
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t k = n; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / static_cast<long>(level);

    // Horner on the Newton form sum dd[k] * t(t-1)...(t-k+1).
    std::vector<Fraction> coeffs{dd[n]};
    for (std::size_t k = n; k-- > 0;) {
        // coeffs <- coeffs * (t - k) + dd[k]
        std::vector<Fraction> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * static_cast<long>(k);
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    std::vector<BigInt> ints;
    ints.reserve(coeffs.size());
    for (const Fraction &c : coeffs) {
        if (c.get_den() != 1)
            throw DomainError("non-integral Alexander coefficient");
        ints.push_back(c.get_num());
    }
    return normalize_units(LaurentPoly::from_coeffs(ints));
}

BigInt knot_determinant(const SeifertMatrix &s) { return abs(determinant(s.symmetrized())); }

int knot_signature(const SeifertMatrix &s) {
    const Inertia in = inertia(to_rational(s.symmetrized()));
    return in.positive - in.negative;
}

FiniteAbelianGroup branched_cover_homology(const SeifertMatrix &s) { return cokernel_group(s.symmetrized()); }

LinkingForm branched_cover_linking_form(const SeifertMatrix &s) {
    const IntMatrix m = s.symmetrized();
    if (determinant(m) == 0)
        throw DomainError("V + V^T is singular; the double branched cover is not a rational homology sphere");
    const SNFResult snf = smith_normal_form(m);
    // U M V = D, so x -> U x identifies coker M with coker D; generator i of
    // the cyclic decomposition is the class of column i of U^{-1}.
    const QMatrix w = inverse(to_rational(snf.u));
    const QMatrix gram_full = multiply(multiply(transpose(w), inverse(to_rational(m))), w);

    std::vector<std::size_t> keep;
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0; i < snf.d.size(); ++i)
        if (snf.d[i] > 1) {
            keep.push_back(i);
            factors.push_back(snf.d[i].get_si());
        }
    std::vector<std::vector<Fraction>> gram(keep.size(), std::vector<Fraction>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            gram[a][b] = gram_full[keep[a]][keep[b]];
    return LinkingForm(FiniteAbelianGroup(std::move(factors)), std::move(gram));
}

} // namespace slicenum
