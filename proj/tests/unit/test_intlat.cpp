#include "gen.hpp"
#include "oracles.hpp"

#include "slicenum/errors.hpp"
#include "slicenum/intlat/int_matrix.hpp"
#include "slicenum/intlat/rational_matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace slicenum;

namespace {

bool is_diagonal_with(const IntMatrix &m, const std::vector<BigInt> &d) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt want = (i == j && i < d.size()) ? d[i] : BigInt(0);
            if (m(i, j) != want)
                return false;
        }
    return true;
}

bool divisibility_chain(const std::vector<BigInt> &d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0)
            return false;
        if (d[i] == 0) {
            if (d[i + 1] != 0)
                return false;
        } else if (d[i + 1] % d[i] != 0) {
            return false;
        }
    }
    return d.empty() || d.back() >= 0;
}

} // namespace

TEST_CASE("integer determinant") {
    CHECK(determinant(IntMatrix{{4, 1}, {1, 4}}) == 15);
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(IntMatrix{{2, 0}, {0, 0}}) == 0);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DomainError);
}

TEST_CASE("integer determinant agrees with cofactor expansion") {
    testgen::Rng rng(201);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 4));
        const IntMatrix m = testgen::matrix(rng, n, n);
        CHECK(determinant(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("Smith normal form examples") {
    CHECK(smith_normal_form(IntMatrix{{4, 1}, {1, 4}}).d == std::vector<BigInt>{1, 15});
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).d == std::vector<BigInt>{1, 6});
    CHECK(smith_normal_form(IntMatrix(2, 3)).d == std::vector<BigInt>{0, 0});
    CHECK(smith_normal_form(IntMatrix{{6, 4}, {4, 6}}).d == std::vector<BigInt>{2, 10});
}

TEST_CASE("Smith normal form properties on random matrices") {
    testgen::Rng rng(202);
    for (int i = 0; i < 500; ++i) {
        const auto r = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
        const auto c = static_cast<std::size_t>(testgen::uniform(rng, 1, 5));
        const IntMatrix m = testgen::matrix(rng, r, c);
        const SNFResult s = smith_normal_form(m);
        REQUIRE(s.d.size() == std::min(r, c));
        CHECK(is_diagonal_with(s.u * m * s.v, s.d));
        CHECK(divisibility_chain(s.d));
        CHECK(abs(oracle::cofactor_det(s.u)) == 1);
        CHECK(abs(oracle::cofactor_det(s.v)) == 1);
        if (r == c) {
            BigInt prod = 1;
            for (const BigInt &x : s.d)
                prod *= x;
            CHECK(prod == abs(oracle::cofactor_det(m)));
        }
    }
}

TEST_CASE("Smith normal form is invariant under row and column permutations") {
    testgen::Rng rng(203);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::size_t>(testgen::uniform(rng, 2, 4));
        const IntMatrix m = testgen::matrix(rng, n, n + 1);
        std::vector<std::size_t> rows(n), cols(n + 1);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        IntMatrix p(n, n + 1);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b <= n; ++b)
                p(a, b) = m(rows[a], cols[b]);
        CHECK(smith_normal_form(p).d == smith_normal_form(m).d);
    }
}

TEST_CASE("cokernel groups") {
    CHECK(cokernel_group(IntMatrix{{4, 1}, {1, 4}}) == FiniteAbelianGroup({15}));
    CHECK(cokernel_group(IntMatrix::identity(3)).is_trivial());
    CHECK(cokernel_group(IntMatrix{{2, 0}, {0, 3}}) == FiniteAbelianGroup({6}));
    CHECK(cokernel_group(direct_sum(IntMatrix{{4, 1}, {1, 4}}, IntMatrix{{4, 1}, {1, 4}})) ==
          FiniteAbelianGroup({15, 15}));
    try {
        cokernel_group(IntMatrix{{0}});
        FAIL("expected an infinite cokernel");
    } catch (const InfiniteCokernel &e) {
        CHECK(e.free_rank() == 1);
    }
    try {
        cokernel_group(IntMatrix{{1, 0, 0}, {0, 0, 0}});
        FAIL("expected an infinite cokernel");
    } catch (const InfiniteCokernel &e) {
        CHECK(e.free_rank() == 1);
    }
}

TEST_CASE("rational inverse and inertia") {
    const QMatrix m = to_rational(IntMatrix{{4, 1}, {1, 4}});
    const QMatrix inv = inverse(m);
    CHECK(inv[0][0] == make_fraction(4, 15));
    CHECK(inv[0][1] == make_fraction(-1, 15));
    const QMatrix id = multiply(m, inv);
    CHECK(id[0][0] == 1);
    CHECK(id[0][1] == 0);
    CHECK_THROWS_AS(inverse(to_rational(IntMatrix{{1, 2}, {2, 4}})), DomainError);

    const Inertia a = inertia(to_rational(IntMatrix{{0, 1}, {1, 0}}));
    CHECK(a.positive == 1);
    CHECK(a.negative == 1);
    const Inertia b = inertia(to_rational(IntMatrix{{1, 2}, {2, 4}}));
    CHECK(b.positive == 1);
    CHECK(b.zero == 1);
}

TEST_CASE("inertia agrees with eigenvalue signs on 2x2 symmetric matrices") {
    testgen::Rng rng(204);
    for (int i = 0; i < 200; ++i) {
        const long a = testgen::uniform(rng, -9, 9), b = testgen::uniform(rng, -9, 9), c = testgen::uniform(rng, -9, 9);
        const Inertia in = inertia(to_rational(IntMatrix{{a, b}, {b, c}}));
        const long det = a * c - b * b, tr = a + c;
        int pos = 0, neg = 0;
        if (det < 0) {
            pos = neg = 1;
        } else if (det > 0) {
            (tr > 0 ? pos : neg) = 2;
        } else {
            pos = tr > 0 ? 1 : 0;
            neg = tr < 0 ? 1 : 0;
        }
        CHECK(in.positive == pos);
        CHECK(in.negative == neg);
        CHECK(in.zero == 2 - pos - neg);
    }
}
