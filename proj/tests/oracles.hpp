// Independent oracles: every routine here takes a different computational
// path than the implementation it checks.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "torigid/charpair.hpp"
#include "torigid/exact_linalg.hpp"

namespace torigid::oracle {

/// gcd of all maximal (c x c) minors of the d x c column matrix; equals 1
/// exactly when the columns are part of a Z-basis. Uses Bareiss determinants,
/// not SNF.
inline Int maximal_minor_gcd(const std::vector<std::vector<Int>>& cols, std::size_t dim) {
    const std::size_t c = cols.size();
    if (c == 0 || c > dim) return c == 0 ? Int(1) : Int(0);
    Int g = 0;
    std::vector<std::size_t> rows(c);
    std::iota(rows.begin(), rows.end(), 0);
    for (;;) {
        IntMatrix minor(c, c);
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = 0; j < c; ++j) minor(i, j) = cols[j][rows[i]];
        g = boost::multiprecision::gcd(g, determinant(minor));
        std::size_t i = c;
        while (i > 0 && rows[i - 1] == dim - c + i - 1) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < c; ++j) rows[j] = rows[j - 1] + 1;
    }
    return g;
}

/// All bijections carrying the vertex family of k1 onto that of k2, by brute
/// force over every permutation (small m only).
inline std::vector<std::vector<int>> brute_force_isomorphisms(const SimpleCombinatorics& k1,
                                                              const SimpleCombinatorics& k2) {
    std::vector<std::vector<int>> out;
    if (k1.facet_count != k2.facet_count) return out;
    const std::size_t m = k1.facet_count;
    auto family = [](const SimpleCombinatorics& k) {
        std::vector<std::vector<int>> f = k.vertices;
        for (auto& v : f) std::sort(v.begin(), v.end());
        std::sort(f.begin(), f.end());
        return f;
    };
    const auto target = family(k2);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::vector<int>> mapped;
        for (const auto& v : k1.vertices) {
            std::vector<int> image;
            for (int j : v) image.push_back(perm[static_cast<std::size_t>(j)]);
            std::sort(image.begin(), image.end());
            mapped.push_back(std::move(image));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Unrestricted equivalence search: every isomorphism, every full sign
/// vector (no anchor fixing), A found by solving the stacked linear system in
/// its entries. Exponential; for n+k <= 3, m <= 5 only.
inline bool brute_force_equivalent(const HyperCharPair& p, const HyperCharPair& q) {
    if (p.facet_count() != q.facet_count() || p.torus_rank != q.torus_rank) return false;
    const std::size_t m = p.facet_count(), nk = p.torus_rank;
    for (const auto& phi : brute_force_isomorphisms(p.combinatorics, q.combinatorics)) {
        for (std::size_t signs = 0; signs < (std::size_t{1} << m); ++signs) {
            // unknowns: the nk*nk entries of A, row-major
            IntMatrix system(m * nk, nk * nk);
            RatVector rhs(m * nk);
            for (std::size_t j = 0; j < m; ++j) {
                const int eps = (signs >> j & 1) ? -1 : 1;
                for (std::size_t i = 0; i < nk; ++i) {
                    for (std::size_t t = 0; t < nk; ++t)
                        system(j * nk + i, i * nk + t) = p.xi(t, j);
                    rhs[j * nk + i] = Rat(eps * q.xi(i, static_cast<std::size_t>(phi[j])));
                }
            }
            const RationalSolution sol = solve_rational(system, rhs);
            if (!sol.solvable) continue;
            // need an integral solution with |det| = 1 in the affine space;
            // with a rational spanning set the solution is unique, so just
            // check the particular one (pairs used here always span).
            bool integral = true;
            IntMatrix a(nk, nk);
            for (std::size_t e = 0; e < nk * nk && integral; ++e) {
                if (boost::multiprecision::denominator(sol.particular[e]) != 1) integral = false;
                else a(e / nk, e % nk) = boost::multiprecision::numerator(sol.particular[e]);
            }
            if (!integral) continue;
            const Int det = determinant(a);
            if (det == 1 || det == -1) return true;
        }
    }
    return false;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

/// Random GL(d, Z) matrix built from elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d, int steps = 12) {
    IntMatrix u = IntMatrix::identity(d);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(d) - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = static_cast<std::size_t>(pick(rng));
        std::size_t j = static_cast<std::size_t>(pick(rng));
        switch (kind(rng)) {
            case 0:
                if (i != j) {
                    const int t = coeff(rng);
                    for (std::size_t c = 0; c < d; ++c) u(i, c) += t * u(j, c);
                }
                break;
            case 1:
                if (i != j)
                    for (std::size_t c = 0; c < d; ++c) std::swap(u(i, c), u(j, c));
                break;
            default:
                for (std::size_t c = 0; c < d; ++c) u(i, c) = -u(i, c);
                break;
        }
    }
    return u;
}

}  // namespace torigid::oracle
