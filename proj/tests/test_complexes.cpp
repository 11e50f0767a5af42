#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "torigid/complexes.hpp"

using namespace torigid;

namespace {

SimpleCombinatorics cube_complex() {
    SimpleCombinatorics k;
    k.dim = 3;
    k.facet_count = 6;  // x=0, x=1, y=0, y=1, z=0, z=1
    k.facet_labels.assign(6, "");
    for (int x : {0, 1})
        for (int y : {2, 3})
            for (int z : {4, 5}) k.vertices.push_back({x, y, z});
    return k;
}

// Exhaustive minimal-non-face scan over every subset, no size cap.
std::vector<std::vector<int>> minimal_non_faces_exhaustive(const SimpleCombinatorics& k) {
    const std::size_t m = k.facet_count;
    auto is_face = [&](std::uint64_t s) {
        for (const auto& v : k.vertices) {
            std::uint64_t mask = 0;
            for (int j : v) mask |= std::uint64_t{1} << j;
            if ((s & ~mask) == 0) return true;
        }
        return false;
    };
    std::vector<std::vector<int>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
        if (is_face(s)) continue;
        bool minimal = true;
        for (std::size_t j = 0; j < m && minimal; ++j)
            if ((s >> j & 1) && !is_face(s & ~(std::uint64_t{1} << j))) minimal = false;
        if (!minimal) continue;
        std::vector<int> subset;
        for (std::size_t j = 0; j < m; ++j)
            if (s >> j & 1) subset.push_back(static_cast<int>(j));
        out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("validate_complex accepts the corpus") {
    CHECK(validate_complex(corpus::triangle()).empty());
    CHECK(validate_complex(corpus::square()).empty());
    CHECK(validate_complex(corpus::pentagon()).empty());
    CHECK(validate_complex(corpus::segment()).empty());
    CHECK(validate_complex(corpus::simplex(3)).empty());
    CHECK(validate_complex(cube_complex()).empty());
}

TEST_CASE("validate_complex reports witnesses") {
    SUBCASE("duplicate vertex") {
        SimpleCombinatorics k = corpus::triangle();
        k.vertices.push_back({0, 1});
        const auto violations = validate_complex(k);
        REQUIRE(!violations.empty());
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const Violation& v) { return v.code == "duplicate_vertex"; }));
    }
    SUBCASE("wrong vertex size") {
        SimpleCombinatorics k = corpus::triangle();
        k.vertices[0] = {0};
        const auto violations = validate_complex(k);
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const Violation& v) { return v.code == "vertex_size"; }));
    }
    SUBCASE("unused facet") {
        SimpleCombinatorics k = corpus::triangle();
        k.facet_count = 4;
        const auto violations = validate_complex(k);
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const Violation& v) { return v.code == "unused_facet"; }));
    }
    SUBCASE("pseudomanifold failure") {
        SimpleCombinatorics k = corpus::square();
        k.vertices.pop_back();
        const auto violations = validate_complex(k);
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const Violation& v) { return v.code == "pseudomanifold"; }));
    }
    SUBCASE("disconnected ridge graph") {
        // two disjoint triangles
        SimpleCombinatorics k;
        k.dim = 2;
        k.facet_count = 6;
        k.vertices = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
        const auto violations = validate_complex(k);
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const Violation& v) { return v.code == "connectivity"; }));
    }
}

TEST_CASE("minimal non-faces: worked examples") {
    CHECK(minimal_non_faces(corpus::square()) ==
          std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    CHECK(minimal_non_faces(corpus::triangle()) == std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(minimal_non_faces(corpus::pentagon()) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

TEST_CASE("minimal non-faces match the exhaustive scan and their definition") {
    for (const auto& k : {corpus::triangle(), corpus::square(), corpus::pentagon(),
                          corpus::segment(), corpus::simplex(3), cube_complex()}) {
        const auto mnf = minimal_non_faces(k);
        CHECK(mnf == minimal_non_faces_exhaustive(k));
        // each is a non-face whose proper subsets are all faces
        auto is_face = [&](const std::vector<int>& s) {
            return std::any_of(k.vertices.begin(), k.vertices.end(), [&](const auto& v) {
                return std::includes(v.begin(), v.end(), s.begin(), s.end());
            });
        };
        for (const auto& s : mnf) {
            CHECK(!is_face(s));
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                CHECK(is_face(sub));
            }
        }
    }
}

TEST_CASE("f-vectors: worked examples") {
    CHECK(f_vector(corpus::triangle()) == std::vector<std::size_t>{1, 3, 3});
    CHECK(f_vector(corpus::square()) == std::vector<std::size_t>{1, 4, 4});
    CHECK(f_vector(cube_complex()) == std::vector<std::size_t>{1, 6, 12, 8});
}

TEST_CASE("isomorphism enumeration: worked examples") {
    CHECK(all_isomorphisms(corpus::square(), corpus::square()).size() == 8);
    CHECK(all_isomorphisms(corpus::triangle(), corpus::triangle()).size() == 6);
    CHECK(all_isomorphisms(corpus::square(), corpus::pentagon()).empty());
}

TEST_CASE("isomorphism enumeration agrees with brute force") {
    const std::vector<SimpleCombinatorics> complexes = {
        corpus::triangle(), corpus::square(), corpus::pentagon(),
        corpus::segment(),  corpus::simplex(3), cube_complex()};
    for (const auto& k1 : complexes)
        for (const auto& k2 : complexes) {
            auto mine = all_isomorphisms(k1, k2);
            auto brute = oracle::brute_force_isomorphisms(k1, k2);
            std::sort(mine.begin(), mine.end());
            std::sort(brute.begin(), brute.end());
            CHECK(mine == brute);
        }
}

TEST_CASE("isomorphisms of a complex form a group preserving the f-vector") {
    for (const auto& k : {corpus::square(), corpus::pentagon(), corpus::simplex(2)}) {
        auto isos = all_isomorphisms(k, k);
        std::set<std::vector<int>> group(isos.begin(), isos.end());
        std::vector<int> identity(k.facet_count);
        for (std::size_t j = 0; j < k.facet_count; ++j) identity[j] = static_cast<int>(j);
        CHECK(group.count(identity) == 1);
        for (const auto& g : isos)
            for (const auto& h : isos) {
                std::vector<int> composed(k.facet_count);
                for (std::size_t j = 0; j < k.facet_count; ++j)
                    composed[j] = h[static_cast<std::size_t>(g[j])];
                CHECK(group.count(composed) == 1);
            }
        for (const auto& g : isos) {
            SimpleCombinatorics relabeled = k;
            for (auto& v : relabeled.vertices) {
                for (int& j : v) j = g[static_cast<std::size_t>(j)];
                std::sort(v.begin(), v.end());
            }
            CHECK(f_vector(relabeled) == f_vector(k));
        }
    }
}

TEST_CASE("the stream is lazy and restartable per instance") {
    IsomorphismStream stream(corpus::square(), corpus::square());
    std::size_t count = 0;
    while (stream.next()) ++count;
    CHECK(count == 8);
    CHECK(!stream.next());  // stays exhausted
}
