#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torigid/complexes.hpp"
#include "torigid/exact_linalg.hpp"

namespace torigid {

struct HPolytope;  // geometry.hpp

/// A simple polytope's combinatorics together with the facet labeling
/// xi: F_j -> Z^(n+k) (column j of `xi`). torus_rank = n + k.
struct HyperCharPair {
    SimpleCombinatorics combinatorics;
    std::size_t torus_rank = 0;
    IntMatrix xi;  // torus_rank x m, column j = xi(F_j)
    // Polytope the pair's data was derived from (the cut source for cut
    // pairs); null when the input was combinatorial-only.
    std::shared_ptr<const HPolytope> geometric_origin;
    std::string name;

    std::size_t dim() const { return combinatorics.dim; }
    std::size_t facet_count() const { return combinatorics.facet_count; }
    std::size_t k() const { return torus_rank - combinatorics.dim; }
};

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility order

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool finite() const { return free_rank == 0; }
    bool operator==(const AbelianGroup& other) const = default;
};

struct SplitResult {
    HyperCharPair reduced;      // same combinatorics, torus rank = rank(xi)
    std::size_t torus_factor = 0;  // k - r
    IntMatrix change_of_basis;  // C in GL(n+k,Z): C*xi_j = (reduced xi_j, 0...0)
    std::vector<Int> residual_torsion;  // nonempty when im(xi) was not a direct summand
};

/// Condition (*) at every vertex (the vertex columns extend to a Z-basis)
/// plus column primitivity. Violations carry the offending vertex and the
/// SNF invariant factors found. Assumes the combinatorics is already valid.
std::vector<Violation> validate_pair(const HyperCharPair& p);

std::size_t rank_of(const HyperCharPair& p);

/// True iff im(xi) is a direct summand of Z^(n+k) (all nonzero invariant
/// factors equal 1).
bool is_direct_summand_image(const HyperCharPair& p);

/// Factors off the torus directions missing from the saturation of im(xi):
/// a GL(n+k,Z) change of basis zeroes the last k-r coordinates of every
/// column, and the first n+r coordinates form the reduced pair.
SplitResult split(const HyperCharPair& p);

/// The group Z^(n+k) / <xi_1, ..., xi_m>, of which the manifold's
/// fundamental group is a quotient. This is the bound, not pi_1 itself.
AbelianGroup pi1_quotient_bound(const HyperCharPair& p);

/// xi = identity on Z^m (torus rank m, k = m - n).
HyperCharPair moment_angle_pair(const SimpleCombinatorics& k);

struct FreenessReport {
    Lattice kernel;  // ker xi inside Z^m
    std::vector<std::vector<int>> failures;  // vertices where ker meets Z^sigma nontrivially

    bool free() const { return failures.empty(); }
};

/// Kernel subtorus lattice of exp(xi): T^m -> T^(n+k), with the per-vertex
/// freeness check of the kernel action.
FreenessReport kernel_subtorus(const HyperCharPair& p);

/// Same combinatorics, columns padded with t zero coordinates (k' = k + t).
HyperCharPair product_with_torus(const HyperCharPair& p, std::size_t t);

/// Columns of xi at a vertex, in the vertex's index order.
std::vector<std::vector<Int>> vertex_columns(const HyperCharPair& p,
                                             const std::vector<int>& vertex);

}  // namespace torigid
