#pragma once

// Brute-force reference implementations.  None of these call into the
// library's algorithms; they only share the value types.

#include "slicenum/exactmath/laurent_poly.hpp"
#include "slicenum/exactmath/poly_matrix.hpp"
#include "slicenum/intlat/int_matrix.hpp"
#include "slicenum/linkform/linking_form.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using slicenum::BigInt;
using slicenum::Fraction;
using slicenum::LaurentPoly;

// Dense schoolbook product over (shift, coefficient vector).
inline LaurentPoly multiply(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.terms().empty() || b.terms().empty())
        return {};
    const auto a0 = a.terms().begin()->first, b0 = b.terms().begin()->first;
    const auto an = a.terms().rbegin()->first - a0 + 1, bn = b.terms().rbegin()->first - b0 + 1;
    std::vector<BigInt> c(static_cast<std::size_t>(an + bn - 1), 0);
    for (const auto &[ea, ca] : a.terms())
        for (const auto &[eb, cb] : b.terms())
            c[static_cast<std::size_t>(ea - a0 + eb - b0)] += ca * cb;
    LaurentPoly out;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0)
            out += LaurentPoly::monomial(c[i], a0 + b0 + static_cast<std::int64_t>(i));
    return out;
}

inline int permutation_sign(const std::vector<std::size_t> &p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                s = -s;
    return s;
}

// Leibniz expansion over all permutations.
inline LaurentPoly permutation_det(const slicenum::PolyMatrix &m) {
    std::vector<std::size_t> p(m.size());
    std::iota(p.begin(), p.end(), 0);
    LaurentPoly det;
    do {
        LaurentPoly term = permutation_sign(p);
        for (std::size_t i = 0; i < p.size(); ++i)
            term = multiply(term, m(i, p[i]));
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

// First-row cofactor expansion.
inline BigInt cofactor_det(const slicenum::IntMatrix &m) {
    const std::size_t n = m.rows();
    if (n == 1)
        return m(0, 0);
    BigInt det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        slicenum::IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, k++) = m(i, j);
        det += ((c % 2) ? -1 : 1) * m(0, c) * cofactor_det(minor);
    }
    return det;
}

// Elements are indexed mixed-radix with the last coordinate fastest.
struct Group {
    std::vector<std::int64_t> d;
    std::int64_t order() const {
        std::int64_t n = 1;
        for (auto x : d)
            n *= x;
        return n;
    }
    std::vector<std::int64_t> element(std::int64_t idx) const {
        std::vector<std::int64_t> x(d.size());
        for (std::size_t i = d.size(); i-- > 0;) {
            x[i] = idx % d[i];
            idx /= d[i];
        }
        return x;
    }
    std::int64_t index(const std::vector<std::int64_t> &x) const {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < d.size(); ++i)
            idx = idx * d[i] + ((x[i] % d[i]) + d[i]) % d[i];
        return idx;
    }
    std::int64_t sum(std::int64_t a, std::int64_t b) const {
        auto x = element(a), y = element(b);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += y[i];
        return index(x);
    }
};

using Members = std::vector<bool>;

// A + B as a set of sums; a subgroup because the group is abelian.
inline Members join(const Group &g, const Members &a, const Members &b) {
    const std::int64_t n = g.order();
    std::vector<std::int64_t> as, bs;
    for (std::int64_t x = 0; x < n; ++x) {
        if (a[x])
            as.push_back(x);
        if (b[x])
            bs.push_back(x);
    }
    Members out(n, false);
    for (std::int64_t x : as)
        for (std::int64_t y : bs)
            out[g.sum(x, y)] = true;
    return out;
}

// Every subgroup is a join of cyclic subgroups.
inline std::set<Members> all_subgroups(const Group &g) {
    const std::int64_t n = g.order();
    std::set<Members> cyclic;
    for (std::int64_t x = 0; x < n; ++x) {
        Members s(n, false);
        for (std::int64_t k = 0, y = 0; k == 0 || y != 0; ++k, y = g.sum(y, x))
            s[y] = true;
        cyclic.insert(s);
    }
    std::set<Members> subs = cyclic;
    std::vector<Members> work(cyclic.begin(), cyclic.end());
    while (!work.empty()) {
        const Members s = work.back();
        work.pop_back();
        for (const Members &c : cyclic) {
            Members j = join(g, s, c);
            if (subs.insert(j).second)
                work.push_back(std::move(j));
        }
    }
    return subs;
}

inline bool pairing_integral(const std::vector<std::vector<Fraction>> &gram, const std::vector<std::int64_t> &x,
                             const std::vector<std::int64_t> &y) {
    Fraction s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            s += Fraction(x[i] * y[j]) * gram[i][j];
    s.canonicalize();
    return s.get_den() == 1;
}

enum class Predicate { all_pairs, self_pairs };

// Existence of a metabolizer by scanning every subgroup.
inline bool has_metabolizer(const slicenum::LinkingForm &f, Predicate pred = Predicate::all_pairs) {
    const Group g{f.group().invariant_factors()};
    const std::int64_t n = g.order();
    for (const Members &h : all_subgroups(g)) {
        const auto size = std::count(h.begin(), h.end(), true);
        if (size * size != n)
            continue;
        bool ok = true;
        for (std::int64_t a = 0; a < n && ok; ++a)
            if (h[a]) {
                if (pred == Predicate::self_pairs) {
                    ok = pairing_integral(f.gram(), g.element(a), g.element(a));
                    continue;
                }
                for (std::int64_t b = 0; b < n && ok; ++b)
                    if (h[b])
                        ok = pairing_integral(f.gram(), g.element(a), g.element(b));
            }
        if (ok)
            return true;
    }
    return false;
}

// Full triple loop, primitive solutions of a^2 + d b^2 = m c^2 with c > 0.
inline std::vector<std::tuple<long, long, long>> norm_form_triples(long m, long d, long bound) {
    std::vector<std::tuple<long, long, long>> out;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = 1; c <= bound; ++c)
                if (a * a + d * b * b == m * c * c && std::gcd(std::gcd(a, b), c) == 1)
                    out.emplace_back(a, b, c);
    return out;
}

} // namespace oracle
