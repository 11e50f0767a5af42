#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "torigid/geometry.hpp"
#include "torigid/rigidity.hpp"

namespace torigid {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers within the 53-bit safe range and as
// decimal strings beyond it; rationals are always strings "p" or "p/q".
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);
Json rat_to_json(const Rat& v);
Rat rat_from_json(const Json& j);

/// PairDocument (format_version "1"): dim, torus_rank, facets[{label, xi}],
/// vertices[[facet indices]]. Loading never fails on condition-(*) or
/// complex violations; it reports them alongside the pair.
struct LoadedPair {
    HyperCharPair pair;
    std::vector<Violation> complex_violations;
    std::vector<Violation> pair_violations;

    bool ok() const { return complex_violations.empty() && pair_violations.empty(); }
};

LoadedPair pair_from_json(const Json& doc);
Json pair_to_json(const HyperCharPair& pair);

/// GeometryDocument (format_version "1"): dim, inequalities[{a, b, label, xi}]
/// with rational strings reduced and positive-denominator.
struct LoadedGeometry {
    HPolytope polytope;
    IntMatrix xi;  // one column per inequality
    std::string name;
};

LoadedGeometry geometry_from_json(const Json& doc);

/// ConeDocument (format_version "1"): ambient_dim, vertices[[ints]],
/// facets[[vertex indices]], facet_labels (optional).
LatticePolytopeV cone_from_json(const Json& doc);

Json certificate_to_json(const EquivalenceCertificate& cert);
EquivalenceCertificate certificate_from_json(const Json& doc);

Json read_json_file(const std::string& path);

}  // namespace torigid
