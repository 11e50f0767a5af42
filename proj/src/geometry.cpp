#include "torigid/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torigid/errors.hpp"

namespace torigid {

namespace {

std::string point_text(const RatVector& p) {
    std::string t = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) t += ",";
        t += format_rational(p[i]);
    }
    return t + ")";
}

Rat dot_rat(const RatVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Fourier-Motzkin feasibility of { a.x <= b }. Small dimensions only.
bool fm_feasible(std::vector<std::pair<RatVector, Rat>> system, std::size_t dim) {
    for (std::size_t var = 0; var < dim; ++var) {
        const std::size_t last = dim - var - 1;  // eliminate the last remaining variable
        std::vector<std::pair<RatVector, Rat>> kept;
        std::vector<std::pair<RatVector, Rat>> lower, upper;  // bounds on x_last
        for (auto& [a, b] : system) {
            const Rat coeff = a[last];
            if (coeff == 0) {
                kept.emplace_back(a, b);
            } else {
                RatVector scaled(last);
                for (std::size_t i = 0; i < last; ++i) scaled[i] = a[i] / coeff;
                if (coeff > 0)
                    upper.emplace_back(std::move(scaled), b / coeff);  // x <= b' - a'.y
                else
                    lower.emplace_back(std::move(scaled), b / coeff);  // x >= b' - a'.y
            }
        }
        std::vector<std::pair<RatVector, Rat>> next;
        for (auto& [a, b] : kept) next.emplace_back(RatVector(a.begin(), a.begin() + last), b);
        for (const auto& [al, bl] : lower)
            for (const auto& [au, bu] : upper) {
                RatVector a(last);
                for (std::size_t i = 0; i < last; ++i) a[i] = au[i] - al[i];
                next.emplace_back(std::move(a), bu - bl);  // lower bound <= upper bound
            }
        system = std::move(next);
    }
    for (const auto& [a, b] : system)
        if (b < 0) return false;  // 0 <= negative
    return true;
}

// Recession cone {x : A x <= 0} is nontrivial iff some signed coordinate
// section of it is feasible.
bool has_recession_direction(const HPolytope& h) {
    for (std::size_t i = 0; i < h.dim; ++i) {
        for (int sign : {1, -1}) {
            std::vector<std::pair<RatVector, Rat>> system;
            for (const auto& ineq : h.inequalities) system.emplace_back(ineq.normal, Rat(0));
            RatVector fix(h.dim, Rat(0)), neg(h.dim, Rat(0));
            fix[i] = sign;
            neg[i] = -sign;
            system.emplace_back(std::move(fix), Rat(1));   // sign * x_i <= 1
            system.emplace_back(std::move(neg), Rat(-1));  // sign * x_i >= 1
            if (fm_feasible(std::move(system), h.dim)) return true;
        }
    }
    return false;
}

}  // namespace

std::vector<EnumeratedVertex> vertex_enumeration(const HPolytope& h) {
    const std::size_t n = h.dim, m = h.inequalities.size();
    if (n == 0) throw TorigidError(ErrorCode::InvalidInput, "polytope dimension must be >= 1");
    for (const auto& ineq : h.inequalities)
        if (ineq.normal.size() != n)
            throw TorigidError(ErrorCode::DimensionMismatch, "inequality normal length != dim");

    {
        std::vector<std::pair<RatVector, Rat>> system;
        for (const auto& ineq : h.inequalities) system.emplace_back(ineq.normal, ineq.bound);
        if (!fm_feasible(std::move(system), n))
            throw TorigidError(ErrorCode::Empty, "inequality system is infeasible");
    }
    if (has_recession_direction(h))
        throw TorigidError(ErrorCode::Unbounded, "recession cone is nontrivial");

    // Solve every n-subset as a square system; keep the feasible solutions.
    std::map<std::vector<int>, RatVector> found;  // full tight set -> point
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
        IntMatrix a(n, n);
        RatVector b(n);
        {
            // clear denominators row by row so the integer-matrix solver applies
            for (std::size_t r = 0; r < n; ++r) {
                const RatVector& row = h.inequalities[idx[r]].normal;
                Int den = 1;
                for (const Rat& v : row)
                    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
                for (std::size_t c = 0; c < n; ++c) {
                    const Rat scaled = row[c] * Rat(den);
                    a(r, c) = boost::multiprecision::numerator(scaled);
                }
                b[r] = h.inequalities[idx[r]].bound * Rat(den);
            }
            const RationalSolution sol = solve_rational(a, b);
            if (sol.solvable && sol.kernel.empty()) {
                // feasibility against every inequality + full tight set
                std::vector<int> tight;
                bool feasible = true;
                for (std::size_t j = 0; j < m && feasible; ++j) {
                    const Rat slack = h.inequalities[j].bound -
                                      dot_rat(h.inequalities[j].normal, sol.particular);
                    if (slack < 0) feasible = false;
                    else if (slack == 0) tight.push_back(static_cast<int>(j));
                }
                if (feasible) {
                    if (tight.size() > n)
                        throw TorigidError(
                            ErrorCode::NotSimple,
                            "vertex " + point_text(sol.particular) + " is tight on " +
                                std::to_string(tight.size()) + " inequalities (dim " +
                                std::to_string(n) + ")");
                    found.emplace(std::move(tight), sol.particular);
                }
            }
        }
        // next combination
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == static_cast<int>(m - n + i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }

    if (found.empty()) throw TorigidError(ErrorCode::Empty, "polytope has no vertices");

    std::vector<bool> facet_used(m, false);
    std::vector<EnumeratedVertex> out;
    out.reserve(found.size());
    for (auto& [tight, point] : found) {
        for (int j : tight) facet_used[static_cast<std::size_t>(j)] = true;
        out.push_back(EnumeratedVertex{point, tight});
    }
    for (std::size_t j = 0; j < m; ++j)
        if (!facet_used[j])
            throw TorigidError(ErrorCode::RedundantInequality,
                               "inequality " + std::to_string(j) + " is tight at no vertex");
    return out;
}

SimpleCombinatorics combinatorics_of(const HPolytope& h) {
    const auto verts = vertex_enumeration(h);
    SimpleCombinatorics k;
    k.dim = h.dim;
    k.facet_count = h.inequalities.size();
    for (const auto& ineq : h.inequalities) k.facet_labels.push_back(ineq.label);
    for (const auto& v : verts) k.vertices.push_back(v.tight);
    return k;
}

HyperCharPair hyperplane_cut(const HPolytope& h, const IntMatrix& xi, const RatVector& c,
                             const Rat& d) {
    if (xi.cols != h.inequalities.size())
        throw TorigidError(ErrorCode::DimensionMismatch, "xi needs one column per facet");
    if (c.size() != h.dim)
        throw TorigidError(ErrorCode::DimensionMismatch, "cut normal length != dim");
    if (std::all_of(c.begin(), c.end(), [](const Rat& v) { return v == 0; }))
        throw TorigidError(ErrorCode::CutMissesInterior, "cut normal is zero");

    const auto verts = vertex_enumeration(h);

    HyperCharPair source;
    source.combinatorics.dim = h.dim;
    source.combinatorics.facet_count = h.inequalities.size();
    for (const auto& ineq : h.inequalities) source.combinatorics.facet_labels.push_back(ineq.label);
    for (const auto& v : verts) source.combinatorics.vertices.push_back(v.tight);
    source.torus_rank = xi.rows;
    source.xi = xi;
    if (!validate_pair(source).empty())
        throw TorigidError(ErrorCode::StarViolation, "input pair violates condition (*)");

    std::vector<int> side(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Rat value = dot_rat(c, verts[i].point) - d;
        if (value == 0)
            throw TorigidError(ErrorCode::VertexOnHyperplane,
                               "vertex " + point_text(verts[i].point) + " lies on the hyperplane");
        side[i] = value > 0 ? 1 : -1;
    }

    // Crossed edges: vertex pairs sharing exactly n-1 tight facets with
    // opposite sides. Their shared facet sets become the cut vertices.
    const std::size_t n = h.dim;
    std::set<std::vector<int>> cut_vertices;
    std::set<int> surviving;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(verts[i].tight.begin(), verts[i].tight.end(),
                                  verts[j].tight.begin(), verts[j].tight.end(),
                                  std::back_inserter(shared));
            if (shared.size() != n - 1 || side[i] == side[j]) continue;
            surviving.insert(shared.begin(), shared.end());
            cut_vertices.insert(std::move(shared));
        }
    if (cut_vertices.empty())
        throw TorigidError(ErrorCode::EmptyCut, "hyperplane misses the polytope");

    std::map<int, int> relabel;
    for (int j : surviving) relabel.emplace(j, static_cast<int>(relabel.size()));

    HyperCharPair out;
    out.combinatorics.dim = n - 1;
    out.combinatorics.facet_count = surviving.size();
    for (int j : surviving)
        out.combinatorics.facet_labels.push_back(source.combinatorics.label(j));
    for (const auto& cv : cut_vertices) {
        std::vector<int> mapped;
        for (int j : cv) mapped.push_back(relabel.at(j));
        std::sort(mapped.begin(), mapped.end());
        out.combinatorics.vertices.push_back(std::move(mapped));
    }
    std::sort(out.combinatorics.vertices.begin(), out.combinatorics.vertices.end());

    out.torus_rank = xi.rows;  // unchanged: the cut raises k by one
    out.xi = IntMatrix(xi.rows, surviving.size());
    for (int j : surviving)
        for (std::size_t i = 0; i < xi.rows; ++i)
            out.xi(i, static_cast<std::size_t>(relabel.at(j))) = xi(i, static_cast<std::size_t>(j));

    out.geometric_origin = std::make_shared<HPolytope>(h);  // the cut source
    if (!validate_complex(out.combinatorics).empty())
        throw TorigidError(ErrorCode::InvalidInput, "cut combinatorics invalid (internal)");
    if (!validate_pair(out).empty())
        throw TorigidError(ErrorCode::StarViolation, "cut pair violates condition (*) (internal)");
    return out;
}

HyperCharPair good_contact_pair(const LatticePolytopeV& l) {
    const std::size_t amb = l.ambient_dim;
    if (amb < 2) throw TorigidError(ErrorCode::InvalidInput, "ambient dimension must be >= 2");
    const std::size_t n = amb - 1;
    for (const auto& v : l.vertices) {
        if (v.size() != amb)
            throw TorigidError(ErrorCode::DimensionMismatch, "vertex length != ambient dim");
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
            throw TorigidError(ErrorCode::InvalidInput, "a vertex is the origin");
    }

    // Combinatorics of P from the incidence: polytope vertex i belongs to the
    // facets whose vertex sets contain i.
    SimpleCombinatorics k;
    k.dim = n;
    k.facet_count = l.facets.size();
    k.facet_labels = l.facet_labels;
    for (std::size_t i = 0; i < l.vertices.size(); ++i) {
        std::vector<int> incident;
        for (std::size_t f = 0; f < l.facets.size(); ++f)
            if (std::find(l.facets[f].begin(), l.facets[f].end(), static_cast<int>(i)) !=
                l.facets[f].end())
                incident.push_back(static_cast<int>(f));
        if (incident.size() != n)
            throw TorigidError(ErrorCode::NotSimple,
                               "polytope vertex " + std::to_string(i) + " lies in " +
                                   std::to_string(incident.size()) + " facets (dim " +
                                   std::to_string(n) + ")");
        k.vertices.push_back(std::move(incident));
    }
    std::sort(k.vertices.begin(), k.vertices.end());
    if (!validate_complex(k).empty())
        throw TorigidError(ErrorCode::InvalidInput, "facet incidence is not a simple complex");

    HyperCharPair out;
    out.combinatorics = k;
    out.torus_rank = amb;  // k = 1
    out.xi = IntMatrix(amb, l.facets.size());

    for (std::size_t f = 0; f < l.facets.size(); ++f) {
        // primitive normal of the linear hyperplane spanned by the facet cone
        IntMatrix rows(l.facets[f].size(), amb);
        for (std::size_t r = 0; r < l.facets[f].size(); ++r) {
            const auto& vtx = l.vertices.at(static_cast<std::size_t>(l.facets[f][r]));
            for (std::size_t cidx = 0; cidx < amb; ++cidx) rows(r, cidx) = vtx[cidx];
        }
        const Lattice ker = kernel_basis(rows);
        if (ker.rank() != 1)
            throw TorigidError(ErrorCode::FacetNotHyperplanar,
                               "facet " + std::to_string(f) + " spans a subspace of rank " +
                                   std::to_string(amb - ker.rank()));
        std::vector<Int> u = ker.basis.column(0);  // primitive: the kernel is saturated

        int orientation = 0;
        for (std::size_t i = 0; i < l.vertices.size(); ++i) {
            if (std::find(l.facets[f].begin(), l.facets[f].end(), static_cast<int>(i)) !=
                l.facets[f].end())
                continue;
            const Int pairing = dot(u, l.vertices[i]);
            if (pairing == 0)
                throw TorigidError(ErrorCode::SignAmbiguous,
                                   "facet " + std::to_string(f) + " normal pairs to 0 with vertex " +
                                       std::to_string(i));
            const int s = pairing > 0 ? 1 : -1;
            if (orientation == 0) orientation = s;
            else if (orientation != s)
                throw TorigidError(ErrorCode::SignAmbiguous,
                                   "facet " + std::to_string(f) +
                                       " has no consistent outward orientation");
        }
        if (orientation == 0)
            throw TorigidError(ErrorCode::SignAmbiguous,
                               "facet " + std::to_string(f) + " touches every vertex");
        if (orientation > 0)
            for (Int& x : u) x = -x;  // outward: pair < 0 with the off-facet vertices
        for (std::size_t i = 0; i < amb; ++i) out.xi(i, f) = u[i];
    }

    const auto violations = validate_pair(out);
    if (!violations.empty())
        throw TorigidError(ErrorCode::StarViolation,
                           "cone normals violate condition (*): " + violations.front().message);
    return out;
}

}  // namespace torigid
