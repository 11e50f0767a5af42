#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "torigid/errors.hpp"
#include "torigid/geometry.hpp"

using namespace torigid;

namespace {

HPolytope from_rows(std::size_t dim,
                    std::initializer_list<std::pair<std::initializer_list<int>, int>> rows) {
    HPolytope h;
    h.dim = dim;
    for (const auto& [normal, bound] : rows) {
        Inequality ineq;
        for (int v : normal) ineq.normal.push_back(Rat(v));
        ineq.bound = bound;
        h.inequalities.push_back(std::move(ineq));
    }
    return h;
}

Rat dot_rat(const RatVector& a, const RatVector& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST_CASE("vertex enumeration: worked examples") {
    SUBCASE("unit square") {
        const auto verts = vertex_enumeration(corpus::unit_square_polytope());
        CHECK(verts.size() == 4);
        for (const auto& v : verts) CHECK(v.tight.size() == 2);
    }
    SUBCASE("unit cube") {
        const auto verts = vertex_enumeration(corpus::cube_polytope());
        CHECK(verts.size() == 8);
        for (const auto& v : verts) CHECK(v.tight.size() == 3);
    }
    SUBCASE("degenerate corner is rejected as not simple") {
        const auto h = from_rows(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 0}});
        CHECK_THROWS_WITH_AS(vertex_enumeration(h), doctest::Contains("tight on 3"),
                             TorigidError);
    }
    SUBCASE("unbounded") {
        const auto h = from_rows(2, {{{-1, 0}, 0}, {{0, -1}, 0}});
        try {
            vertex_enumeration(h);
            FAIL("expected Unbounded");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::Unbounded);
        }
    }
    SUBCASE("empty") {
        const auto h = from_rows(1, {{{1}, 0}, {{-1}, -1}});  // x <= 0, x >= 1
        try {
            vertex_enumeration(h);
            FAIL("expected Empty");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::Empty);
        }
    }
    SUBCASE("redundant inequality") {
        auto h = corpus::unit_square_polytope();
        Inequality extra;
        extra.normal = {Rat(1), Rat(0)};
        extra.bound = 5;
        h.inequalities.push_back(extra);
        try {
            vertex_enumeration(h);
            FAIL("expected RedundantInequality");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::RedundantInequality);
        }
    }
}

TEST_CASE("vertex enumeration is exact: every vertex satisfies every inequality") {
    for (const auto& h : {corpus::unit_square_polytope(), corpus::cube_polytope()}) {
        for (const auto& v : vertex_enumeration(h)) {
            CHECK(v.tight.size() == h.dim);
            for (std::size_t j = 0; j < h.inequalities.size(); ++j) {
                const Rat slack =
                    h.inequalities[j].bound - dot_rat(h.inequalities[j].normal, v.point);
                CHECK(slack >= 0);
                const bool tight =
                    std::find(v.tight.begin(), v.tight.end(), static_cast<int>(j)) !=
                    v.tight.end();
                CHECK((slack == 0) == tight);
            }
        }
    }
}

TEST_CASE("combinatorics_of: worked examples") {
    SUBCASE("unit square gives the square complex") {
        const auto k = combinatorics_of(corpus::unit_square_polytope());
        CHECK(k.dim == 2);
        CHECK(k.facet_count == 4);
        CHECK(validate_complex(k).empty());
        CHECK(f_vector(k) == std::vector<std::size_t>{1, 4, 4});
    }
    SUBCASE("cube") {
        const auto k = combinatorics_of(corpus::cube_polytope());
        CHECK(validate_complex(k).empty());
        CHECK(f_vector(k) == std::vector<std::size_t>{1, 6, 12, 8});
    }
    SUBCASE("3-simplex has all 3-subsets tight") {
        const auto h = from_rows(
            3, {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}, {{1, 1, 1}, 1}});
        const auto k = combinatorics_of(h);
        CHECK(k.vertices.size() == 4);
        CHECK(validate_complex(k).empty());
        for (const auto& v : k.vertices) CHECK(v.size() == 3);
    }
}

TEST_CASE("hyperplane cut: the cube-to-square pipeline") {
    for (long long a : {0, 1})
        for (long long b : {0, 1}) {
            const auto pair = hyperplane_cut(corpus::cube_polytope(), corpus::cube_xi(a, b, 1, 0),
                                             RatVector{Rat(0), Rat(0), Rat(1)}, make_rat(1, 2));
            CHECK(pair.dim() == 2);
            CHECK(pair.torus_rank == 3);
            CHECK(pair.k() == 1);
            CHECK(pair.facet_count() == 4);
            CHECK(validate_pair(pair).empty());
            // columns inherited unchanged, facet order x=0, x=1, y=0, y=1
            const IntMatrix expected = IntMatrix::from_rows(
                {{1, 1, -1, 0}, {0, -2, 1, 1}, {a, 1, b, 0}});
            CHECK(pair.xi == expected);
            CHECK(pair.combinatorics.facet_labels ==
                  std::vector<std::string>{"x=0", "x=1", "y=0", "y=1"});
        }
}

TEST_CASE("hyperplane cut: error cases") {
    const auto cube = corpus::cube_polytope();
    const auto xi = corpus::cube_xi(0, 0, 0, 0);
    SUBCASE("cut through vertices") {
        try {
            hyperplane_cut(cube, xi, RatVector{Rat(0), Rat(0), Rat(1)}, Rat(0));
            FAIL("expected VertexOnHyperplane");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::VertexOnHyperplane);
        }
    }
    SUBCASE("cut misses the polytope") {
        try {
            hyperplane_cut(cube, xi, RatVector{Rat(0), Rat(0), Rat(1)}, Rat(5));
            FAIL("expected EmptyCut");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::EmptyCut);
        }
    }
    SUBCASE("zero normal") {
        try {
            hyperplane_cut(cube, xi, RatVector{Rat(0), Rat(0), Rat(0)}, Rat(0));
            FAIL("expected CutMissesInterior");
        } catch (const TorigidError& e) {
            CHECK(e.code() == ErrorCode::CutMissesInterior);
        }
    }
}

TEST_CASE("hyperplane cut: diagonal cut of the cube still yields a valid pair") {
    // x + y + z = 1/2 slices off the corner at the origin: a triangle pair.
    const auto pair = hyperplane_cut(corpus::cube_polytope(), corpus::cube_xi(0, 0, 0, 0),
                                     RatVector{Rat(1), Rat(1), Rat(1)}, make_rat(1, 2));
    CHECK(pair.dim() == 2);
    CHECK(pair.facet_count() == 3);  // the three facets through the cut corner
    CHECK(validate_pair(pair).empty());
    CHECK(f_vector(pair.combinatorics) == std::vector<std::size_t>{1, 3, 3});
}

TEST_CASE("good contact pair: square cone normals") {
    const auto pair = good_contact_pair(corpus::square_cone());
    CHECK(pair.dim() == 2);
    CHECK(pair.torus_rank == 3);
    CHECK(pair.k() == 1);
    CHECK(validate_pair(pair).empty());
    // facet order x=1, y=-1, x=-1, y=1
    const IntMatrix expected =
        IntMatrix::from_rows({{1, 0, -1, 0}, {0, -1, 0, 1}, {-1, -1, -1, -1}});
    CHECK(pair.xi == expected);
}

TEST_CASE("good contact pair: triangle cone") {
    LatticePolytopeV l;
    l.ambient_dim = 3;
    l.vertices = {{Int(1), Int(0), Int(1)}, {Int(0), Int(1), Int(1)}, {Int(0), Int(0), Int(1)}};
    l.facets = {{0, 1}, {1, 2}, {0, 2}};
    const auto pair = good_contact_pair(l);
    const IntMatrix expected = IntMatrix::from_rows({{1, -1, 0}, {1, 0, -1}, {-1, 0, 0}});
    CHECK(pair.xi == expected);
    CHECK(validate_pair(pair).empty());
}

TEST_CASE("good contact pair: outwardness and primitivity hold") {
    for (const auto& cone : {corpus::square_cone()}) {
        const auto pair = good_contact_pair(cone);
        for (std::size_t f = 0; f < cone.facets.size(); ++f) {
            const auto u = pair.xi.column(f);
            CHECK(is_primitive(u));
            for (std::size_t i = 0; i < cone.vertices.size(); ++i) {
                const Int pairing = dot(u, cone.vertices[i]);
                const bool on_facet = std::find(cone.facets[f].begin(), cone.facets[f].end(),
                                                static_cast<int>(i)) != cone.facets[f].end();
                if (on_facet) CHECK(pairing == 0);
                else CHECK(pairing < 0);
            }
        }
    }
}

TEST_CASE("good contact pair: degenerate facet is rejected") {
    LatticePolytopeV l;
    l.ambient_dim = 3;
    l.vertices = {{Int(1), Int(1), Int(1)}, {Int(2), Int(2), Int(2)}, {Int(0), Int(1), Int(0)}};
    l.facets = {{0, 1}, {1, 2}, {0, 2}};
    try {
        good_contact_pair(l);
        FAIL("expected FacetNotHyperplanar");
    } catch (const TorigidError& e) {
        CHECK(e.code() == ErrorCode::FacetNotHyperplanar);
    }
}
