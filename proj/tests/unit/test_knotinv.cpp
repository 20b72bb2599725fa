#include "gen.hpp"
#include "oracles.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/intlat/rational_matrix.hpp"
#include "slicenum/knotinv/seifert.hpp"
#include "slicenum/linkform/metabolizer.hpp"

#include <doctest.h>

#include <map>

using namespace slicenum;

namespace {

const IntMatrix v74{{2, 1}, {0, 2}};
const IntMatrix trefoil{{1, 1}, {0, 1}};
const IntMatrix unknot{{0, 1}, {0, 0}};
const IntMatrix stevedore{{2, 1}, {0, -1}};

IntMatrix random_genus1(testgen::Rng &rng) {
    const long b = testgen::uniform(rng, -4, 4);
    const long c = b + (testgen::uniform(rng, 0, 1) ? 1 : -1);
    return IntMatrix{{testgen::uniform(rng, -4, 4), b}, {c, testgen::uniform(rng, -4, 4)}};
}

IntMatrix random_unimodular(testgen::Rng &rng, std::size_t n) {
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 0; k < 6; ++k) {
        const auto i = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(n) - 1));
        const auto j = static_cast<std::size_t>(testgen::uniform(rng, 0, static_cast<long>(n) - 1));
        if (i == j)
            continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = testgen::uniform(rng, -2, 2);
        p = e * p;
    }
    return p;
}

IntMatrix random_seifert(testgen::Rng &rng) {
    IntMatrix v = random_genus1(rng);
    if (testgen::uniform(rng, 0, 2) == 0)
        v = direct_sum(v, random_genus1(rng));
    const IntMatrix p = random_unimodular(rng, v.rows());
    return p * v * p.transpose();
}

LaurentPoly cofactor_alexander(const IntMatrix &v) {
    const std::size_t n = v.rows();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = LaurentPoly(v(i, j)) - LaurentPoly::monomial(v(j, i), 1);
    return oracle::permutation_det(m);
}

// Multiset of x^T A^-1 x mod 1 over a fundamental box of |det A| Z^n, each
// element of coker A appearing |det A|^(n-1) times.
std::map<Fraction, long> box_self_linking(const IntMatrix &a) {
    const QMatrix inv = inverse(to_rational(a));
    const long n = BigInt(abs(oracle::cofactor_det(a))).get_si();
    const std::size_t dim = a.rows();
    std::map<Fraction, long> hist;
    std::vector<long> x(dim, 0);
    long repeats = 1;
    for (std::size_t i = 1; i < dim; ++i)
        repeats *= n;
    while (true) {
        Fraction s = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                s += Fraction(x[i] * x[j]) * inv[i][j];
        ++hist[mod_one(s)];
        std::size_t k = 0;
        while (k < dim && ++x[k] == n)
            x[k++] = 0;
        if (k == dim)
            break;
    }
    for (auto &[v, c] : hist)
        c /= repeats;
    return hist;
}

std::map<Fraction, long> form_self_linking(const LinkingForm &f) {
    std::map<Fraction, long> hist;
    for (std::int64_t i = 0; i < f.group().order(); ++i) {
        const Element x = f.group().decode(i);
        ++hist[pairing_eval(f, x, x)];
    }
    return hist;
}

} // namespace

TEST_CASE("Seifert matrix validation") {
    CHECK_NOTHROW(SeifertMatrix{v74});
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), DomainError);
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 2}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 2}}), DomainError);
    CHECK(SeifertMatrix(direct_sum(SeifertMatrix(v74), SeifertMatrix(v74)).matrix()).genus() == 2);
}

TEST_CASE("Alexander polynomial examples") {
    CHECK(alexander_polynomial(SeifertMatrix(v74)) == LaurentPoly{{2, 4}, {1, -7}, {0, 4}});
    CHECK(alexander_polynomial(SeifertMatrix(trefoil)) == LaurentPoly{{2, 1}, {1, -1}, {0, 1}});
    CHECK(alexander_polynomial(SeifertMatrix(unknot)) == LaurentPoly(1));
    CHECK(alexander_polynomial(SeifertMatrix(stevedore)) == LaurentPoly{{2, 2}, {1, -5}, {0, 2}});
}

TEST_CASE("determinant, signature and homology examples") {
    CHECK(knot_determinant(SeifertMatrix(v74)) == 15);
    CHECK(knot_determinant(SeifertMatrix(trefoil)) == 3);
    CHECK(knot_determinant(direct_sum(SeifertMatrix(v74), SeifertMatrix(v74))) == 225);
    CHECK(knot_signature(SeifertMatrix(v74)) == 2);
    CHECK(knot_signature(SeifertMatrix(trefoil)) == 2);
    CHECK(knot_signature(SeifertMatrix(stevedore)) == 0);
    const IntMatrix mirror = IntMatrix(2, 2) - v74.transpose();
    CHECK(knot_signature(direct_sum(SeifertMatrix(v74), SeifertMatrix(mirror))) == 0);
    CHECK(branched_cover_homology(SeifertMatrix(v74)) == FiniteAbelianGroup({15}));
    CHECK(branched_cover_homology(SeifertMatrix(trefoil)) == FiniteAbelianGroup({3}));
    CHECK(branched_cover_homology(SeifertMatrix(unknot)).is_trivial());
    CHECK(branched_cover_homology(direct_sum(SeifertMatrix(v74), SeifertMatrix(v74))) ==
          FiniteAbelianGroup({15, 15}));
}

TEST_CASE("linking form examples") {
    const LinkingForm b74 = branched_cover_linking_form(SeifertMatrix(v74));
    REQUIRE(b74.group() == FiniteAbelianGroup({15}));
    CHECK(cyclic_form_equivalent(15, b74.gram()[0][0], make_fraction(4, 15)));
    const LinkingForm b3 = branched_cover_linking_form(SeifertMatrix(trefoil));
    REQUIRE(b3.group() == FiniteAbelianGroup({3}));
    CHECK(cyclic_form_equivalent(3, b3.gram()[0][0], make_fraction(2, 3)));
    CHECK(branched_cover_linking_form(SeifertMatrix(unknot)).group().is_trivial());

    const LinkingForm sum = branched_cover_linking_form(direct_sum(SeifertMatrix(v74), SeifertMatrix(trefoil)));
    CHECK(sum.group() == FiniteAbelianGroup({3, 15}));
    CHECK(form_self_linking(sum) == box_self_linking(IntMatrix{{4, 1, 0, 0}, {1, 4, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}));
}

TEST_CASE("invariants of random Seifert matrices") {
    testgen::Rng rng(301);
    int checked = 0;
    for (int i = 0; i < 150; ++i) {
        const IntMatrix v = random_seifert(rng);
        const SeifertMatrix s(v);
        const LaurentPoly delta = alexander_polynomial(s);
        CHECK(associated(delta, cofactor_alexander(v)));
        CHECK(abs(evaluate(delta, BigInt(1))) == 1);
        CHECK(associated(delta, conjugate(delta)));
        const BigInt det = knot_determinant(s);
        CHECK(det % 2 == 1);
        CHECK(det == abs(evaluate(delta, BigInt(-1))));
        CHECK(branched_cover_homology(s).order() == det);
        const int sig = knot_signature(s);
        CHECK(sig % 2 == 0);
        CHECK(std::abs(sig) <= static_cast<int>(v.rows()));

        const IntMatrix mirror = IntMatrix(v.rows(), v.cols()) - v.transpose();
        CHECK(knot_signature(SeifertMatrix(mirror)) == -sig);
        CHECK(associated(alexander_polynomial(SeifertMatrix(mirror)), delta));

        const LinkingForm f = branched_cover_linking_form(s);
        CHECK(f.group() == branched_cover_homology(s));
        if (det <= 40 && v.rows() == 2) {
            CHECK(form_self_linking(f) == box_self_linking(s.symmetrized()));
            for (std::int64_t x = 1; x < f.group().order(); ++x) {
                bool pairs_nontrivially = false;
                for (std::int64_t y = 0; y < f.group().order() && !pairs_nontrivially; ++y)
                    pairs_nontrivially = pairing_eval(f, f.group().decode(x), f.group().decode(y)) != 0;
                CHECK(pairs_nontrivially);
            }
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("invariants are unchanged by a change of Seifert surface basis") {
    testgen::Rng rng(302);
    for (int i = 0; i < 50; ++i) {
        const IntMatrix p = random_unimodular(rng, 2);
        const SeifertMatrix s(p * v74 * p.transpose());
        CHECK(alexander_polynomial(s) == alexander_polynomial(SeifertMatrix(v74)));
        CHECK(knot_signature(s) == 2);
        const LinkingForm f = branched_cover_linking_form(s);
        CHECK(cyclic_form_equivalent(15, f.gram()[0][0], make_fraction(4, 15)));
        CHECK(slice_obstruction_check(f).verdict == SliceVerdict::obstructed_by_order);
    }
}
