#include "slicenum/seventy4/cover.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

LaurentPoly delta_74_symmetric() { return {{1, 4}, {0, -7}, {-1, 4}}; }

LaurentPoly delta_74() { return {{2, 4}, {1, -7}, {0, 4}}; }

CoverPresentation::CoverPresentation(LaurentPoly f, LaurentPoly g) : f_(std::move(f)), g_(std::move(g)) {
    if (conjugate(f_) != f_)
        throw DomainError("f must be symmetric under t -> t^-1");
    const Fraction f1 = evaluate(f_, Fraction(1));
    if (f1 != 1 && f1 != -1)
        throw DomainError("f(1) must be +-1 (the crossing circle carries +-1 surgery)");
    if (evaluate(g_, Fraction(1)) != 0)
        throw DomainError("g(1) must vanish (the crossing circle has linking number 0 with the knot)");
}

PolyMatrix build_cover_matrix(const CoverPresentation &cp) {
    const LaurentPoly corner{{1, -2}, {0, 3}, {-1, -2}};
    return PolyMatrix{
        {corner, 1, cp.g()},
        {1, -2, 0},
        {conjugate(cp.g()), 0, cp.f()},
    };
}

bool det_identity_check(const CoverPresentation &cp) {
    const LaurentPoly lhs = determinant(build_cover_matrix(cp));
    const LaurentPoly rhs = cp.f() * delta_74_symmetric() + LaurentPoly(2) * cp.g() * conjugate(cp.g());
    return lhs == rhs;
}

ParityCheck theorem2_parity_check(const LaurentPoly &h) {
    const LaurentPoly g = LaurentPoly{{1, 1}, {0, -1}} * delta_74() * h;
    const EvenOddSums s = even_odd_sums(g);
    const BigInt h_minus_one = h.is_zero() ? BigInt(0) : evaluate(h, BigInt(-1));
    const bool ok = s.even == -15 * h_minus_one && s.odd == 15 * h_minus_one;
    return {s.even, s.odd, ok};
}

std::vector<BigInt> cover_linking_coefficients(const LaurentPoly &g, std::int64_t n) {
    return reduce_mod_tn_minus_1(g, n);
}

namespace {

long uniform(std::mt19937_64 &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

} // namespace

LaurentPoly random_symmetric_unit_at_one(std::mt19937_64 &rng, int max_degree) {
    const long d = uniform(rng, 0, max_degree);
    LaurentPoly f;
    BigInt pair_sum = 0;
    for (long i = 1; i <= d; ++i) {
        const long c = uniform(rng, -9, 9);
        f += LaurentPoly::monomial(c, i) + LaurentPoly::monomial(c, -i);
        pair_sum += c;
    }
    const long unit = uniform(rng, 0, 1) ? 1 : -1;
    f += LaurentPoly(BigInt(unit - 2 * pair_sum));
    return f;
}

LaurentPoly random_vanishing_at_one(std::mt19937_64 &rng, int max_degree) {
    const long span = uniform(rng, 1, max_degree);
    const long lo = uniform(rng, -max_degree / 2, 0);
    LaurentPoly g;
    for (long e = lo; e <= lo + span; ++e)
        g += LaurentPoly::monomial(uniform(rng, -9, 9), e);
    const long pivot = uniform(rng, lo, lo + span);
    g -= LaurentPoly::monomial(evaluate(g, BigInt(1)), pivot);
    return g;
}

LaurentPoly random_laurent(std::mt19937_64 &rng, int max_degree, long coeff_bound) {
    const long span = uniform(rng, 0, max_degree);
    const long lo = uniform(rng, -max_degree / 2, max_degree / 2);
    LaurentPoly p;
    for (long e = lo; e <= lo + span; ++e)
        p += LaurentPoly::monomial(uniform(rng, -coeff_bound, coeff_bound), e);
    return p;
}

} // namespace slicenum
