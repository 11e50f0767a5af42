#include "torigid/cohomology.hpp"

#include <algorithm>

#include "torigid/errors.hpp"

namespace torigid {

SRPresentation sr_presentation(const HyperCharPair& p) {
    SRPresentation sr;
    sr.generator_count = p.facet_count();
    sr.relations = minimal_non_faces(p.combinatorics);
    const CokernelInvariants coker = cokernel_invariants(p.xi);
    if (coker.free_rank == 0 && coker.torsion.empty()) {
        sr.algebra_map_matrix = p.xi;
        return sr;
    }
    const SplitResult s = split(p);
    sr.algebra_map_matrix = s.reduced.xi;
    sr.torus_factor = s.torus_factor;
    sr.image_saturated = s.residual_torsion.empty();
    return sr;
}

std::vector<Int> algebra_map(const HyperCharPair& p, const std::vector<Int>& u) {
    if (u.size() != p.torus_rank)
        throw TorigidError(ErrorCode::DimensionMismatch, "algebra_map: |u| != n+k");
    std::vector<Int> coeff(p.facet_count());
    for (std::size_t j = 0; j < p.facet_count(); ++j) coeff[j] = dot(p.xi.column(j), u);
    return coeff;
}

VertexRestriction dual_representatives(const HyperCharPair& p, const std::vector<int>& vertex) {
    const auto cols = vertex_columns(p, vertex);
    const auto basis = extend_to_basis(cols, p.torus_rank);
    const IntMatrix b = IntMatrix::from_columns(basis, p.torus_rank);
    const IntMatrix b_inv = invert_unimodular(b);  // row s is dual to basis vector s

    VertexRestriction out;
    out.vertex = vertex;
    for (std::size_t s = 0; s < vertex.size(); ++s) out.representatives.push_back(b_inv.row(s));
    IntMatrix ann(p.torus_rank, p.torus_rank - vertex.size());
    for (std::size_t s = vertex.size(); s < p.torus_rank; ++s)
        for (std::size_t i = 0; i < p.torus_rank; ++i) ann(i, s - vertex.size()) = b_inv(s, i);
    out.annihilator = lattice_from_columns(ann, p.torus_rank);
    return out;
}

std::vector<Int> reduce_mod_lattice(std::vector<Int> w, const Lattice& lattice) {
    if (w.size() != lattice.ambient_dim)
        throw TorigidError(ErrorCode::DimensionMismatch, "reduce_mod_lattice vector length");
    const IntMatrix& h = lattice.basis;
    for (std::size_t j = 0; j < h.cols; ++j) {
        std::size_t pivot = 0;
        while (pivot < h.rows && h(pivot, j) == 0) ++pivot;
        const Int q = floor_div(w[pivot], h(pivot, j));
        if (q == 0) continue;
        for (std::size_t i = 0; i < h.rows; ++i) w[i] -= q * h(i, j);
    }
    return w;
}

std::vector<Int> restrict_degree2(const HyperCharPair& p, const std::vector<int>& vertex,
                                  const std::vector<Int>& coefficients) {
    if (coefficients.size() != p.facet_count())
        throw TorigidError(ErrorCode::DimensionMismatch, "restrict_degree2: coefficient count");
    const VertexRestriction vr = dual_representatives(p, vertex);
    std::vector<Int> value(p.torus_rank, 0);
    for (std::size_t s = 0; s < vertex.size(); ++s) {
        const Int& c = coefficients[static_cast<std::size_t>(vertex[s])];
        if (c == 0) continue;
        for (std::size_t i = 0; i < p.torus_rank; ++i) value[i] += c * vr.representatives[s][i];
    }
    return reduce_mod_lattice(std::move(value), vr.annihilator);
}

IntMatrix recover_characteristic(const SRPresentation& sr) {
    const IntMatrix& map = sr.algebra_map_matrix;
    IntMatrix out(map.rows, sr.generator_count);
    for (std::size_t s = 0; s < map.rows; ++s) {
        std::vector<Int> unit(map.rows, 0);
        unit[s] = 1;
        for (std::size_t j = 0; j < sr.generator_count; ++j)
            out(s, j) = dot(map.column(j), unit);  // coefficient of tau_j in pi*(e_s*)
    }
    return out;
}

std::vector<std::size_t> hilbert_coefficients(const HyperCharPair& p, std::size_t max_degree) {
    const auto f = f_vector(p.combinatorics);  // f[s] = number of faces with s facets
    std::vector<std::size_t> out;
    for (std::size_t deg2 = 0; deg2 <= max_degree / 2; ++deg2) {
        if (deg2 == 0) {
            out.push_back(1);
            continue;
        }
        // monomials of degree d with support a face of size s: compositions
        // of d into s positive parts, C(d-1, s-1) each
        std::size_t total = 0;
        for (std::size_t s = 1; s < f.size() && s <= deg2; ++s) {
            std::size_t binom = 1;
            for (std::size_t i = 1; i < s; ++i) binom = binom * (deg2 - i) / i;
            total += f[s] * binom;
        }
        out.push_back(total);
    }
    return out;
}

}  // namespace torigid
