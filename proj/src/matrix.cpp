#include "torigid/matrix.hpp"

#include "torigid/errors.hpp"

namespace torigid {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> data) {
    IntMatrix m(data.size(), data.size() ? data.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : data) {
        if (row.size() != m.cols)
            throw TorigidError(ErrorCode::DimensionMismatch, "ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& data) {
    IntMatrix m(data.size(), data.empty() ? 0 : data.front().size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != m.cols)
            throw TorigidError(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = data[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& columns, std::size_t dim) {
    IntMatrix m(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != dim)
            throw TorigidError(ErrorCode::DimensionMismatch, "column length != ambient dimension");
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        throw TorigidError(ErrorCode::DimensionMismatch, "matrix product shapes");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Int> multiply(const IntMatrix& a, const std::vector<Int>& x) {
    if (a.cols != x.size())
        throw TorigidError(ErrorCode::DimensionMismatch, "matrix-vector product shapes");
    std::vector<Int> y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) y[i] += a(i, j) * x[j];
    return y;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
    return t;
}

Int determinant(const IntMatrix& a) {
    if (a.rows != a.cols)
        throw TorigidError(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
    const std::size_t n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;  // exact (Bareiss)
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t rank_rational(const IntMatrix& a) {
    // Fraction-free row elimination; only the rank is wanted.
    IntMatrix m = a;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(rank, j), m(pivot, j));
        for (std::size_t i = rank + 1; i < m.rows; ++i) {
            if (m(i, col) == 0) continue;
            const Int f = m(i, col), p = m(rank, col);
            for (std::size_t j = col; j < m.cols; ++j) m(i, j) = m(i, j) * p - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size())
        throw TorigidError(ErrorCode::DimensionMismatch, "dot product lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace torigid
