#include "slicenum/exactmath/poly_matrix.hpp"

#include "slicenum/errors.hpp"

namespace slicenum {

PolyMatrix::PolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0)
        throw DomainError("PolyMatrix needs dimension >= 1");
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
    : PolyMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != n_)
            throw DomainError("PolyMatrix rows must form a square");
        std::size_t j = 0;
        for (const auto &e : row)
            (*this)(i, j++) = e;
        ++i;
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

namespace {

LaurentPoly minor_det(const PolyMatrix &m, std::vector<std::size_t> &rows_left,
                      std::vector<std::size_t> &cols, std::size_t depth) {
    const std::size_t k = cols.size();
    if (k == 0)
        return 1;
    const std::size_t row = rows_left[depth];
    LaurentPoly total;
    for (std::size_t c = 0; c < k; ++c) {
        const LaurentPoly &entry = m(row, cols[c]);
        if (entry.is_zero())
            continue;
        std::size_t col = cols[c];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
        LaurentPoly sub = entry * minor_det(m, rows_left, cols, depth + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
        if (c % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    return total;
}

} // namespace

LaurentPoly determinant(const PolyMatrix &m) {
    std::vector<std::size_t> rows(m.size()), cols(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        rows[i] = cols[i] = i;
    return minor_det(m, rows, cols, 0);
}

} // namespace slicenum
