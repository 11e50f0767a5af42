#include "torigid/exact_linalg.hpp"

#include <algorithm>

#include "torigid/errors.hpp"

namespace torigid {

std::vector<Int> SNFDecomposition::invariant_factors() const {
    std::vector<Int> f;
    const std::size_t nmin = std::min(d.rows, d.cols);
    for (std::size_t i = 0; i < nmin; ++i)
        if (d(i, i) != 0) f.push_back(d(i, i));
    return f;
}

std::size_t SNFDecomposition::rank() const { return invariant_factors().size(); }

namespace {

// Elementary operations applied to D with the transforms kept in sync:
//   row op  E:  D <- E D,  U <- E U,  U^-1 <- U^-1 E^-1
//   col op  F:  D <- D F,  V <- V F,  V^-1 <- F^-1 V^-1

struct SNFWork {
    IntMatrix d, u, ui, v, vi;

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < d.cols; ++c) std::swap(d(i, c), d(j, c));
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u(i, c), u(j, c));
        for (std::size_t r = 0; r < ui.rows; ++r) std::swap(ui(r, i), ui(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < d.rows; ++r) std::swap(d(r, i), d(r, j));
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v(r, i), v(r, j));
        for (std::size_t c = 0; c < vi.cols; ++c) std::swap(vi(i, c), vi(j, c));
    }
    // row i += t * row j
    void add_row(std::size_t i, std::size_t j, const Int& t) {
        for (std::size_t c = 0; c < d.cols; ++c) d(i, c) += t * d(j, c);
        for (std::size_t c = 0; c < u.cols; ++c) u(i, c) += t * u(j, c);
        for (std::size_t r = 0; r < ui.rows; ++r) ui(r, j) -= t * ui(r, i);
    }
    // col j += t * col i
    void add_col(std::size_t j, std::size_t i, const Int& t) {
        for (std::size_t r = 0; r < d.rows; ++r) d(r, j) += t * d(r, i);
        for (std::size_t r = 0; r < v.rows; ++r) v(r, j) += t * v(r, i);
        for (std::size_t c = 0; c < vi.cols; ++c) vi(i, c) -= t * vi(j, c);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < d.cols; ++c) d(i, c) = -d(i, c);
        for (std::size_t c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
        for (std::size_t r = 0; r < ui.rows; ++r) ui(r, i) = -ui(r, i);
    }

    bool find_min_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = s; i < d.rows; ++i)
            for (std::size_t j = s; j < d.cols; ++j) {
                if (d(i, j) == 0) continue;
                Int a = boost::multiprecision::abs(d(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    bool off_pivot_clear(std::size_t s) const {
        for (std::size_t i = s + 1; i < d.rows; ++i)
            if (d(i, s) != 0) return false;
        for (std::size_t j = s + 1; j < d.cols; ++j)
            if (d(s, j) != 0) return false;
        return true;
    }
};

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& a) {
    SNFWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.rows),
              IntMatrix::identity(a.cols), IntMatrix::identity(a.cols)};
    const std::size_t nmin = std::min(a.rows, a.cols);

    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pi = s, pj = s;
        if (!w.find_min_pivot(s, pi, pj)) break;  // remainder is zero
        for (;;) {
            w.swap_rows(s, pi);
            w.swap_cols(s, pj);
            // Euclidean reduction of column s and row s against the pivot.
            for (std::size_t i = s + 1; i < w.d.rows; ++i)
                if (w.d(i, s) != 0) w.add_row(i, s, -(w.d(i, s) / w.d(s, s)));
            for (std::size_t j = s + 1; j < w.d.cols; ++j)
                if (w.d(s, j) != 0) w.add_col(j, s, -(w.d(s, j) / w.d(s, s)));
            if (!w.off_pivot_clear(s)) {
                w.find_min_pivot(s, pi, pj);
                continue;
            }
            // Divisibility fix-up: the pivot must divide the remaining block.
            bool fixed = true;
            for (std::size_t i = s + 1; i < w.d.rows && fixed; ++i)
                for (std::size_t j = s + 1; j < w.d.cols && fixed; ++j)
                    if (w.d(i, j) % w.d(s, s) != 0) {
                        w.add_row(s, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
            w.find_min_pivot(s, pi, pj);
        }
        if (w.d(s, s) < 0) w.negate_row(s);
    }
    return SNFDecomposition{w.u, w.d, w.v, w.ui, w.vi};
}

IntMatrix column_hnf(const IntMatrix& a) {
    const std::size_t dim = a.rows;
    std::vector<std::vector<Int>> cols(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) cols[j] = a.column(j);

    std::size_t next = 0;  // number of pivot columns fixed so far
    for (std::size_t r = 0; r < dim && next < cols.size(); ++r) {
        // gcd-reduce the entries of row r across the unfixed columns
        for (;;) {
            std::size_t best = cols.size();
            for (std::size_t j = next; j < cols.size(); ++j) {
                if (cols[j][r] == 0) continue;
                if (best == cols.size() ||
                    boost::multiprecision::abs(cols[j][r]) <
                        boost::multiprecision::abs(cols[best][r]))
                    best = j;
            }
            if (best == cols.size()) break;  // row r zero in unfixed columns
            std::swap(cols[next], cols[best]);
            bool others = false;
            for (std::size_t j = next + 1; j < cols.size(); ++j) {
                if (cols[j][r] == 0) continue;
                const Int q = cols[j][r] / cols[next][r];
                for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= q * cols[next][i];
                if (cols[j][r] != 0) others = true;
            }
            if (!others) break;
        }
        if (cols[next][r] == 0) continue;  // no pivot in this row
        if (cols[next][r] < 0)
            for (std::size_t i = 0; i < dim; ++i) cols[next][i] = -cols[next][i];
        // reduce the pivot row entries of the already-fixed columns into [0, pivot)
        for (std::size_t j = 0; j < next; ++j) {
            const Int q = floor_div(cols[j][r], cols[next][r]);
            if (q == 0) continue;
            for (std::size_t i = 0; i < dim; ++i) cols[j][i] -= q * cols[next][i];
        }
        ++next;
    }

    // The surviving columns are reordered by pivot row for the canonical form.
    std::vector<std::vector<Int>> pivots(cols.begin(), cols.begin() + next);
    std::sort(pivots.begin(), pivots.end(), [](const auto& x, const auto& y) {
        std::size_t px = 0, py = 0;
        while (px < x.size() && x[px] == 0) ++px;
        while (py < y.size() && y[py] == 0) ++py;
        return px < py;
    });
    return IntMatrix::from_columns(pivots, dim);
}

Lattice lattice_from_columns(const IntMatrix& generators, std::size_t ambient_dim) {
    if (generators.rows != ambient_dim)
        throw TorigidError(ErrorCode::DimensionMismatch, "lattice generators vs ambient dim");
    return Lattice{ambient_dim, column_hnf(generators)};
}

bool lattice_contains(const Lattice& lattice, const std::vector<Int>& v) {
    if (v.size() != lattice.ambient_dim)
        throw TorigidError(ErrorCode::DimensionMismatch, "lattice membership vector length");
    std::vector<Int> w = v;
    const IntMatrix& h = lattice.basis;
    for (std::size_t j = 0; j < h.cols; ++j) {
        std::size_t p = 0;
        while (p < h.rows && h(p, j) == 0) ++p;
        if (w[p] % h(p, j) != 0) return false;
        const Int q = w[p] / h(p, j);
        for (std::size_t i = 0; i < h.rows; ++i) w[i] -= q * h(i, j);
    }
    for (const Int& x : w)
        if (x != 0) return false;
    return true;
}

bool is_unimodular_extendable(const std::vector<std::vector<Int>>& cols, std::size_t dim) {
    if (cols.empty()) return true;
    if (cols.size() > dim) return false;
    const IntMatrix m = IntMatrix::from_columns(cols, dim);
    const auto factors = smith_normal_form(m).invariant_factors();
    if (factors.size() != cols.size()) return false;  // rationally dependent
    for (const Int& f : factors)
        if (f != 1) return false;
    return true;
}

Lattice kernel_basis(const IntMatrix& a) {
    const SNFDecomposition snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    IntMatrix gens(a.cols, a.cols - r);
    for (std::size_t j = r; j < a.cols; ++j)
        for (std::size_t i = 0; i < a.cols; ++i) gens(i, j - r) = snf.v(i, j);
    return lattice_from_columns(gens, a.cols);
}

Lattice saturation(const IntMatrix& a) {
    const SNFDecomposition snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    IntMatrix gens(a.rows, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < a.rows; ++i) gens(i, j) = snf.u_inv(i, j);
    return lattice_from_columns(gens, a.rows);
}

CokernelInvariants cokernel_invariants(const IntMatrix& a) {
    const SNFDecomposition snf = smith_normal_form(a);
    CokernelInvariants out;
    const auto factors = snf.invariant_factors();
    out.free_rank = a.rows - factors.size();
    for (const Int& f : factors)
        if (f > 1) out.torsion.push_back(f);
    return out;
}

std::vector<std::vector<Int>> extend_to_basis(const std::vector<std::vector<Int>>& cols,
                                              std::size_t dim) {
    if (!is_unimodular_extendable(cols, dim))
        throw TorigidError(ErrorCode::NotExtendable, "input is not part of a Z-basis");
    std::vector<std::vector<Int>> out = cols;
    if (cols.size() == dim) return out;
    const IntMatrix m = IntMatrix::from_columns(cols, dim);
    // U M V = (I | 0)^T, so M V = first n columns of U^-1; the remaining
    // columns of U^-1 complete the input span to all of Z^dim.
    const SNFDecomposition snf = smith_normal_form(m);
    for (std::size_t j = cols.size(); j < dim; ++j) out.push_back(snf.u_inv.column(j));
    return out;
}

RationalSolution solve_rational(const IntMatrix& a, const RatVector& b) {
    if (b.size() != a.rows)
        throw TorigidError(ErrorCode::DimensionMismatch, "solve_rational rhs length");
    // Gauss-Jordan on [A | b] over Q.
    std::vector<RatVector> m(a.rows, RatVector(a.cols + 1));
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = Rat(a(i, j));
        m[i][a.cols] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t p = row;
        while (p < a.rows && m[p][col] == 0) ++p;
        if (p == a.rows) continue;
        std::swap(m[row], m[p]);
        const Rat inv = m[row][col];
        for (std::size_t j = col; j <= a.cols; ++j) m[row][j] /= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j <= a.cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    RationalSolution out;
    for (std::size_t i = row; i < a.rows; ++i)
        if (m[i][a.cols] != 0) return out;  // 0 = nonzero: inconsistent
    out.solvable = true;
    out.particular.assign(a.cols, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        out.particular[pivot_col[r]] = m[r][a.cols];
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector k(a.cols, Rat(0));
        k[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) k[pivot_col[r]] = -m[r][free];
        out.kernel.push_back(std::move(k));
    }
    return out;
}

IntMatrix invert_unimodular(const IntMatrix& u) {
    if (u.rows != u.cols)
        throw TorigidError(ErrorCode::InvalidInput, "invert_unimodular: non-square");
    const std::size_t n = u.rows;
    IntMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rat(0));
        e[j] = 1;
        const RationalSolution sol = solve_rational(u, e);
        if (!sol.solvable || !sol.kernel.empty())
            throw TorigidError(ErrorCode::InvalidInput, "invert_unimodular: singular matrix");
        for (std::size_t i = 0; i < n; ++i) {
            if (boost::multiprecision::denominator(sol.particular[i]) != 1)
                throw TorigidError(ErrorCode::InvalidInput, "invert_unimodular: not unimodular");
            out(i, j) = boost::multiprecision::numerator(sol.particular[i]);
        }
    }
    return out;
}

}  // namespace torigid
