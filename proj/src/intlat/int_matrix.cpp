#include "slicenum/intlat/int_matrix.hpp"

#include "slicenum/errors.hpp"

#include <sstream>
#include <utility>

namespace slicenum {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw DomainError("IntMatrix dimensions must be >= 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto &row : rows) {
        if (row.size() != cols_)
            throw DomainError("ragged IntMatrix initializer");
        std::size_t j = 0;
        for (long e : row)
            (*this)(i, j++) = e;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
        throw DomainError("matrix product dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix sum dimension mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
        r.entries_[i] += b.entries_[i];
    return r;
}

IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DomainError("matrix difference dimension mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i)
        r.entries_[i] -= b.entries_[i];
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j).get_str();
        os << '\n';
    }
    return os.str();
}

IntMatrix direct_sum(const IntMatrix &a, const IntMatrix &b) {
    IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

BigInt determinant(const IntMatrix &m) {
    if (!m.is_square())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// U*M*V = A maintained throughout.
struct SnfState {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c)
            std::swap(u(i, c), u(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r)
            std::swap(v(r, i), v(r, j));
    }
    // row_dst += k * row_src
    void add_row(std::size_t dst, std::size_t src, const BigInt &k) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a(dst, c) += k * a(src, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(dst, c) += k * u(src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt &k) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            a(r, dst) += k * a(r, src);
        for (std::size_t r = 0; r < v.rows(); ++r)
            v(r, dst) += k * v(r, src);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(i, c) = -u(i, c);
    }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix &m) {
    SnfState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t diag = std::min(rows, cols);

    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Smallest nonzero |entry| in the trailing block; first in
            // row-major order on ties.
            bool found = false;
            std::size_t pr = t, pc = t;
            BigInt best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const BigInt &e = s.a(i, j);
                    if (e != 0 && (!found || abs(e) < best)) {
                        found = true;
                        best = abs(e);
                        pr = i;
                        pc = j;
                    }
                }
            if (!found)
                goto done;
            s.swap_rows(t, pr);
            s.swap_cols(t, pc);

            bool clear = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (s.a(i, t) == 0)
                    continue;
                s.add_row(i, t, -floor_div(s.a(i, t), s.a(t, t)));
                if (s.a(i, t) != 0)
                    clear = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (s.a(t, j) == 0)
                    continue;
                s.add_col(j, t, -floor_div(s.a(t, j), s.a(t, t)));
                if (s.a(t, j) != 0)
                    clear = false;
            }
            if (!clear)
                continue;

            // The pivot must divide the whole trailing block; if it does not,
            // pull an offending row up and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t())) {
                        s.add_row(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (s.a(t, t) < 0)
            s.negate_row(t);
    }
done:
    SNFResult r{std::vector<BigInt>(diag), std::move(s.u), std::move(s.v)};
    for (std::size_t i = 0; i < diag; ++i)
        r.d[i] = s.a(i, i);
    return r;
}

FiniteAbelianGroup cokernel_group(const IntMatrix &m) {
    const SNFResult snf = smith_normal_form(m);
    std::size_t free_rank = m.rows() > m.cols() ? m.rows() - m.cols() : 0;
    std::vector<std::int64_t> factors;
    for (const BigInt &d : snf.d) {
        if (d == 0) {
            ++free_rank;
        } else if (d > 1) {
            if (!d.fits_slong_p())
                throw CapacityError("invariant factor " + d.get_str() + " exceeds 64 bits");
            factors.push_back(d.get_si());
        }
    }
    if (free_rank > 0)
        throw InfiniteCokernel(free_rank);
    return FiniteAbelianGroup(std::move(factors));
}

} // namespace slicenum
