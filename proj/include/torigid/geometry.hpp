#pragma once

#include <string>
#include <vector>

#include "torigid/charpair.hpp"
#include "torigid/numeric.hpp"

namespace torigid {

struct Inequality {
    RatVector normal;  // a, length dim
    Rat bound;         // b, meaning a . x <= b
    std::string label;
};

/// Bounded simple polytope in H-representation; every inequality must define
/// a facet (verified during vertex enumeration).
struct HPolytope {
    std::size_t dim = 0;
    std::vector<Inequality> inequalities;
};

struct EnumeratedVertex {
    RatVector point;
    std::vector<int> tight;  // indices of inequalities tight at the point, size = dim
};

/// Exact vertex enumeration by solving all C(m, n) tight subsets. Throws
/// Unbounded / Empty / NotSimple / RedundantInequality. Vertices are sorted
/// by tight set.
std::vector<EnumeratedVertex> vertex_enumeration(const HPolytope& h);

/// Dual complex of the polytope: vertices = tight sets.
SimpleCombinatorics combinatorics_of(const HPolytope& h);

/// Cuts (Q, xi) along the hyperplane c . x = d, which must miss all vertices
/// of Q and meet its interior. The result lives over P = Q cut to the
/// hyperplane: facets of P are the crossed facets of Q, vertices of P are the
/// crossed edges, xi-columns are inherited unchanged, and the torus rank is
/// kept, so k grows by one.
HyperCharPair hyperplane_cut(const HPolytope& h, const IntMatrix& xi, const RatVector& c,
                             const Rat& d);

/// Simple lattice polytope in R^(n+1) \ {0}; facets as vertex-index subsets.
struct LatticePolytopeV {
    std::size_t ambient_dim = 0;  // n+1
    std::vector<std::vector<Int>> vertices;
    std::vector<std::vector<int>> facets;
    std::vector<std::string> facet_labels;
};

/// Labels each cone facet with the primitive outward normal of its linear
/// span and assembles the k=1 pair over the polytope's combinatorics.
HyperCharPair good_contact_pair(const LatticePolytopeV& l);

}  // namespace torigid
