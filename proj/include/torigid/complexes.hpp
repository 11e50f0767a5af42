#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torigid/numeric.hpp"

namespace torigid {

/// Dual simplicial complex of a simple n-polytope with m facets: each vertex
/// of the polytope is recorded as the n-subset of facet indices meeting there.
struct SimpleCombinatorics {
    std::size_t dim = 0;          // n
    std::size_t facet_count = 0;  // m
    std::vector<std::string> facet_labels;       // size m (may be empty -> default labels)
    std::vector<std::vector<int>> vertices;      // sorted n-subsets of {0..m-1}

    std::string label(std::size_t j) const {
        return j < facet_labels.size() && !facet_labels[j].empty()
                   ? facet_labels[j]
                   : "F" + std::to_string(j + 1);
    }
};

/// One violated invariant with a witness. `vertex` / `invariant_factors` are
/// filled only where they apply.
struct Violation {
    std::string code;
    std::string message;
    std::vector<int> vertex;
    std::vector<Int> invariant_factors;
};

/// Checks the pseudomanifold + connectivity battery (necessary, not
/// sufficient, for polytopality). Empty result means ok.
std::vector<Violation> validate_complex(const SimpleCombinatorics& k);

/// All inclusion-minimal facet subsets spanning no face, sorted
/// lexicographically. Minimal non-faces have size at most n+1.
std::vector<std::vector<int>> minimal_non_faces(const SimpleCombinatorics& k);

/// (f_-1, f_0, ..., f_{n-1}) of the dual complex; f_-1 = 1.
std::vector<std::size_t> f_vector(const SimpleCombinatorics& k);

/// Lazy backtracking enumeration of the bijections {0..m-1} -> {0..m-1}
/// carrying the vertex-subset family of k1 onto that of k2. Deterministic
/// order; one consumer per stream instance.
class IsomorphismStream {
  public:
    IsomorphismStream(const SimpleCombinatorics& k1, const SimpleCombinatorics& k2);

    /// Next bijection (facet j of k1 -> value[j] of k2), or nullopt when done.
    std::optional<std::vector<int>> next();

  private:
    bool feasible(int source, int target) const;
    void backtrack();

    bool compatible_ = false;
    bool exhausted_ = false;
    std::size_t m_ = 0;
    std::vector<std::uint64_t> masks1_, masks2_;
    std::vector<std::vector<int>> masks1_members_;  // vertex masks containing each source facet
    std::vector<int> order_;                        // source facets, decreasing degree
    std::vector<std::vector<int>> candidates_;      // fingerprint-compatible targets per depth
    std::vector<std::size_t> choice_;
    std::vector<int> assignment_;
    std::vector<bool> used_;
    std::size_t depth_ = 0;
};

std::vector<std::vector<int>> all_isomorphisms(const SimpleCombinatorics& k1,
                                               const SimpleCombinatorics& k2);

}  // namespace torigid
