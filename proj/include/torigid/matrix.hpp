#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torigid/numeric.hpp"

namespace torigid {

/// Dense arbitrary-precision integer matrix, row-major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> entries;  // rows * cols, row-major

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> data);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& data);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& columns, std::size_t dim);

    Int& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    std::vector<Int> column(std::size_t j) const;
    std::vector<Int> row(std::size_t i) const;

    bool operator==(const IntMatrix& other) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> multiply(const IntMatrix& a, const std::vector<Int>& x);
IntMatrix transpose(const IntMatrix& a);

/// Signed determinant by fraction-free (Bareiss) elimination. Square input only.
Int determinant(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank_rational(const IntMatrix& a);

/// Dot product of equal-length integer vectors.
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace torigid
