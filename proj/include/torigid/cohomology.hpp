#pragma once

#include <vector>

#include "torigid/charpair.hpp"

namespace torigid {

/// Stanley-Reisner presentation of the equivariant cohomology: degree-2
/// generators tau_1..tau_m, square-free monomial relations indexed by the
/// minimal non-faces, and the algebra structure map u -> sum <xi_j, u> tau_j
/// encoded column-wise by `algebra_map_matrix`.
struct SRPresentation {
    std::size_t generator_count = 0;
    std::vector<std::vector<int>> relations;  // minimal non-faces (0-based facet subsets)
    IntMatrix algebra_map_matrix;             // xi of the pair actually presented
    std::size_t torus_factor = 0;  // > 0 when the pair was split before presenting
    bool image_saturated = true;   // the theorem's hypothesis im(xi) = Z^(n+k)
};

/// Presents p directly when im(xi) = Z^(n+k); otherwise presents
/// split(p).reduced with the torus factor recorded.
SRPresentation sr_presentation(const HyperCharPair& p);

/// Coefficients of pi*(u) = sum_j <xi_j, u> tau_j.
std::vector<Int> algebra_map(const HyperCharPair& p, const std::vector<Int>& u);

/// Dual representatives x_{i_s} at a vertex: <xi_{i_r}, x_{i_s}> = delta_rs,
/// with the annihilator of the vertex columns in Hermite form.
struct VertexRestriction {
    std::vector<int> vertex;
    std::vector<std::vector<Int>> representatives;  // n vectors in (Z^(n+k))*
    Lattice annihilator;                            // Ann<xi_{i_1},...,xi_{i_n}>
};

VertexRestriction dual_representatives(const HyperCharPair& p, const std::vector<int>& vertex);

/// Canonical representative of w modulo the lattice (reduction against the
/// Hermite basis, pivot entries landed in [0, pivot)).
std::vector<Int> reduce_mod_lattice(std::vector<Int> w, const Lattice& lattice);

/// Restricts a degree-2 class (coefficients of tau_1..tau_m) to the vertex
/// orbit: generators away from the vertex die, tau_{i_s} goes to the class of
/// x_{i_s}. Returned canonically reduced modulo the annihilator.
std::vector<Int> restrict_degree2(const HyperCharPair& p, const std::vector<int>& vertex,
                                  const std::vector<Int>& coefficients);

/// Reads the characteristic matrix back off the algebra map by evaluating on
/// the dual standard basis; equals the source xi entry-for-entry.
IntMatrix recover_characteristic(const SRPresentation& sr);

/// Ranks of the graded pieces in degrees 0, 2, ..., 2*floor(max_degree/2):
/// monomials of the given degree whose support is a face.
std::vector<std::size_t> hilbert_coefficients(const HyperCharPair& p, std::size_t max_degree);

}  // namespace torigid
