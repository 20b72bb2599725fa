#include "slicenum/intlat/rational_matrix.hpp"

#include "slicenum/errors.hpp"

#include <utility>

namespace slicenum {

QMatrix to_rational(const IntMatrix &m) {
    QMatrix q(m.rows(), std::vector<Fraction>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            q[i][j] = m(i, j);
    return q;
}

QMatrix multiply(const QMatrix &a, const QMatrix &b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw DomainError("rational product dimension mismatch");
    QMatrix r(a.size(), std::vector<Fraction>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

QMatrix transpose(const QMatrix &a) {
    if (a.empty())
        return {};
    QMatrix t(a[0].size(), std::vector<Fraction>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

QMatrix inverse(const QMatrix &m) {
    const std::size_t n = m.size();
    for (const auto &row : m)
        if (row.size() != n)
            throw DomainError("inverse of a non-square matrix");
    QMatrix a = m;
    QMatrix inv(n, std::vector<Fraction>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            throw DomainError("matrix is singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const Fraction piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0)
                continue;
            const Fraction f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Inertia inertia(QMatrix m) {
    const std::size_t n = m.size();
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            // Prefer a nonzero diagonal entry further down; otherwise add a
            // coupled row/column, which makes m[k][k] = 2 m[k][j] != 0.
            std::size_t j = k + 1;
            while (j < n && m[j][j] == 0)
                ++j;
            if (j < n) {
                std::swap(m[k], m[j]);
                for (auto &row : m)
                    std::swap(row[k], row[j]);
            } else {
                j = k + 1;
                while (j < n && m[k][j] == 0)
                    ++j;
                if (j == n) {
                    ++out.zero;
                    continue;
                }
                for (std::size_t c = 0; c < n; ++c)
                    m[k][c] += m[j][c];
                for (std::size_t r = 0; r < n; ++r)
                    m[r][k] += m[r][j];
            }
        }
        const Fraction piv = m[k][k];
        if (piv > 0)
            ++out.positive;
        else
            ++out.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            const Fraction f = m[i][k] / piv;
            for (std::size_t c = k; c < n; ++c)
                m[i][c] -= f * m[k][c];
        }
        for (std::size_t j = k + 1; j < n; ++j)
            m[k][j] = 0;
        for (std::size_t i = k + 1; i < n; ++i)
            m[i][k] = 0;
    }
    return out;
}

} // namespace slicenum
