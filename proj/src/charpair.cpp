#include "torigid/charpair.hpp"

#include <algorithm>

#include "torigid/errors.hpp"

namespace torigid {

std::vector<std::vector<Int>> vertex_columns(const HyperCharPair& p,
                                             const std::vector<int>& vertex) {
    std::vector<std::vector<Int>> cols;
    cols.reserve(vertex.size());
    for (int j : vertex) cols.push_back(p.xi.column(static_cast<std::size_t>(j)));
    return cols;
}

std::vector<Violation> validate_pair(const HyperCharPair& p) {
    std::vector<Violation> out;
    if (p.torus_rank < p.dim()) {
        out.push_back({"torus_rank", "torus rank smaller than polytope dimension", {}, {}});
        return out;
    }
    if (p.xi.rows != p.torus_rank || p.xi.cols != p.facet_count()) {
        out.push_back({"xi_shape", "xi must be (n+k) x m", {}, {}});
        return out;
    }
    for (std::size_t j = 0; j < p.xi.cols; ++j)
        if (!is_primitive(p.xi.column(j)))
            out.push_back({"non_primitive",
                           "column of " + p.combinatorics.label(j) + " is not primitive",
                           {static_cast<int>(j)}, {}});

    for (const auto& vertex : p.combinatorics.vertices) {
        const auto cols = vertex_columns(p, vertex);
        if (is_unimodular_extendable(cols, p.torus_rank)) continue;
        const auto factors =
            smith_normal_form(IntMatrix::from_columns(cols, p.torus_rank)).invariant_factors();
        Violation v{"star_condition", "vertex columns are not part of a Z-basis", vertex,
                    factors};
        if (factors.size() < vertex.size()) v.message += " (rationally dependent)";
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank_of(const HyperCharPair& p) { return rank_rational(p.xi); }

bool is_direct_summand_image(const HyperCharPair& p) {
    return cokernel_invariants(p.xi).torsion.empty();
}

AbelianGroup pi1_quotient_bound(const HyperCharPair& p) {
    const CokernelInvariants c = cokernel_invariants(p.xi);
    return AbelianGroup{c.free_rank, c.torsion};
}

SplitResult split(const HyperCharPair& p) {
    const std::size_t n_plus_k = p.torus_rank;
    const Lattice sat = saturation(p.xi);
    const std::size_t r = sat.rank();

    SplitResult out;
    if (r == n_plus_k) {
        out.reduced = p;
        out.torus_factor = 0;
        out.change_of_basis = IntMatrix::identity(n_plus_k);
        out.residual_torsion = cokernel_invariants(p.xi).torsion;
        return out;
    }

    // Z^(n+k) = M(xi) (+) complement; in the basis (saturation columns,
    // completion) every xi_j has zero in the last n+k-r coordinates.
    std::vector<std::vector<Int>> sat_cols;
    for (std::size_t j = 0; j < r; ++j) sat_cols.push_back(sat.basis.column(j));
    const auto basis = extend_to_basis(sat_cols, n_plus_k);
    const IntMatrix b = IntMatrix::from_columns(basis, n_plus_k);
    const IntMatrix c = invert_unimodular(b);

    const IntMatrix transformed = multiply(c, p.xi);
    IntMatrix reduced_xi(r, p.xi.cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < p.xi.cols; ++j) reduced_xi(i, j) = transformed(i, j);
    for (std::size_t i = r; i < n_plus_k; ++i)
        for (std::size_t j = 0; j < p.xi.cols; ++j)
            if (transformed(i, j) != 0)
                throw TorigidError(ErrorCode::InvalidInput,
                                   "split: column escapes the saturation (internal)");

    out.reduced = HyperCharPair{p.combinatorics, r, std::move(reduced_xi), p.geometric_origin,
                                p.name.empty() ? "" : p.name + ".reduced"};
    out.torus_factor = n_plus_k - r;
    out.change_of_basis = c;
    out.residual_torsion = cokernel_invariants(out.reduced.xi).torsion;
    return out;
}

HyperCharPair moment_angle_pair(const SimpleCombinatorics& k) {
    HyperCharPair p;
    p.combinatorics = k;
    p.torus_rank = k.facet_count;
    p.xi = IntMatrix::identity(k.facet_count);
    return p;
}

FreenessReport kernel_subtorus(const HyperCharPair& p) {
    FreenessReport report;
    report.kernel = kernel_basis(p.xi);
    const std::size_t kr = report.kernel.rank();
    for (const auto& vertex : p.combinatorics.vertices) {
        // ker xi meets the coordinate sublattice Z^sigma only in 0 iff the
        // concatenated generators stay full rank.
        IntMatrix joint(p.facet_count(), kr + vertex.size());
        for (std::size_t j = 0; j < kr; ++j)
            for (std::size_t i = 0; i < p.facet_count(); ++i)
                joint(i, j) = report.kernel.basis(i, j);
        for (std::size_t s = 0; s < vertex.size(); ++s)
            joint(static_cast<std::size_t>(vertex[s]), kr + s) = 1;
        if (rank_rational(joint) != kr + vertex.size()) report.failures.push_back(vertex);
    }
    return report;
}

HyperCharPair product_with_torus(const HyperCharPair& p, std::size_t t) {
    if (t == 0) return p;
    HyperCharPair out = p;
    out.torus_rank = p.torus_rank + t;
    out.xi = IntMatrix(out.torus_rank, p.xi.cols);
    for (std::size_t i = 0; i < p.xi.rows; ++i)
        for (std::size_t j = 0; j < p.xi.cols; ++j) out.xi(i, j) = p.xi(i, j);
    return out;
}

}  // namespace torigid
