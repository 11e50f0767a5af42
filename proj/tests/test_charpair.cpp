#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "torigid/charpair.hpp"

using namespace torigid;

namespace {

HyperCharPair segment_pair_z2() {
    HyperCharPair p;
    p.combinatorics = corpus::segment();
    p.torus_rank = 2;
    p.xi = IntMatrix::from_rows({{1, 1}, {0, 2}});  // columns (1,0), (1,2)
    return p;
}

HyperCharPair bad_square_pair() {
    HyperCharPair p;
    p.combinatorics = corpus::square();
    p.torus_rank = 2;
    p.xi = IntMatrix::from_rows({{1, 0, -1, 0}, {0, 2, 0, -1}});
    return p;
}

}  // namespace

TEST_CASE("validate_pair: worked examples") {
    SUBCASE("cut-square family validates for small parameters") {
        for (long long a : {-2, 0, 2})
            for (long long d : {-1, 1})
                CHECK(validate_pair(corpus::cut_square_pair(a, 0, d, -a)).empty());
    }
    SUBCASE("perturbed square is rejected with the invariant factors") {
        const auto violations = validate_pair(bad_square_pair());
        REQUIRE(!violations.empty());
        const auto at_01 = std::find_if(violations.begin(), violations.end(), [](const auto& v) {
            return v.code == "star_condition" && v.vertex == std::vector<int>{0, 1};
        });
        REQUIRE(at_01 != violations.end());
        CHECK(at_01->invariant_factors == std::vector<Int>{1, 2});
        // the column (0,2) is also non-primitive
        CHECK(std::any_of(violations.begin(), violations.end(),
                          [](const auto& v) { return v.code == "non_primitive"; }));
    }
    SUBCASE("moment-angle pairs always validate") {
        for (const auto& k : {corpus::triangle(), corpus::square(), corpus::pentagon()})
            CHECK(validate_pair(moment_angle_pair(k)).empty());
    }
    SUBCASE("whole corpus validates") {
        for (const auto& p : corpus::standard_pairs())
            CHECK_MESSAGE(validate_pair(p).empty(), p.name);
    }
}

TEST_CASE("rank and direct-summand image") {
    SUBCASE("cut-square pair has rank 2 with a saturated image") {
        const auto p = corpus::cut_square_pair(0, 0, 0, 0);
        CHECK(rank_of(p) == 2);
        CHECK(is_direct_summand_image(p));
    }
    SUBCASE("index-2 image is not a direct summand") {
        const auto p = segment_pair_z2();
        CHECK(rank_of(p) == 2);
        CHECK_FALSE(is_direct_summand_image(p));
        CHECK(pi1_quotient_bound(p).torsion == std::vector<Int>{2});
    }
    SUBCASE("index-2 image inside Z^3") {
        HyperCharPair p;
        p.combinatorics = corpus::segment();
        p.torus_rank = 3;
        p.xi = IntMatrix::from_rows({{1, 1}, {0, 2}, {0, 0}});
        CHECK(rank_of(p) == 2);
        CHECK_FALSE(is_direct_summand_image(p));
    }
}

TEST_CASE("split: worked examples") {
    SUBCASE("cut-square pair splits off one circle") {
        const auto p = corpus::cut_square_pair(0, 0, 0, 0);
        const SplitResult s = split(p);
        CHECK(s.torus_factor == 1);
        CHECK(s.reduced.torus_rank == 2);
        CHECK(s.reduced.xi == IntMatrix::from_rows({{1, -1, 1, 0}, {0, 1, -2, 1}}));
        CHECK(s.residual_torsion.empty());
        CHECK(validate_pair(s.reduced).empty());
        // change of basis maps columns onto (reduced, 0)
        const IntMatrix image = multiply(s.change_of_basis, p.xi);
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(image(0, j) == s.reduced.xi(0, j));
            CHECK(image(1, j) == s.reduced.xi(1, j));
            CHECK(image(2, j) == 0);
        }
        const Int det = determinant(s.change_of_basis);
        CHECK((det == 1 || det == -1));
    }
    SUBCASE("full-rank pairs split trivially") {
        for (const auto& p : {corpus::cp_pair(2), corpus::hirzebruch_pair(1)}) {
            const SplitResult s = split(p);
            CHECK(s.torus_factor == 0);
            CHECK(s.reduced.xi == p.xi);
            CHECK(s.change_of_basis == IntMatrix::identity(p.torus_rank));
        }
    }
    SUBCASE("moment-angle pairs are already reduced") {
        const SplitResult s = split(moment_angle_pair(corpus::pentagon()));
        CHECK(s.torus_factor == 0);
        CHECK(s.reduced.xi == IntMatrix::identity(5));
    }
    SUBCASE("rank is preserved and the reduced pair is valid, corpus-wide") {
        for (const auto& p : corpus::standard_pairs()) {
            const SplitResult s = split(p);
            CHECK(rank_of(s.reduced) == rank_of(p));
            CHECK(validate_pair(s.reduced).empty());
            CHECK(s.torus_factor == p.torus_rank - rank_of(p));
        }
    }
    SUBCASE("non-saturated full-rank image keeps its torsion") {
        const SplitResult s = split(segment_pair_z2());
        CHECK(s.torus_factor == 0);
        CHECK(s.residual_torsion == std::vector<Int>{2});
    }
}

TEST_CASE("pi1 quotient bound: worked examples") {
    CHECK(pi1_quotient_bound(corpus::cp_pair(2)).trivial());
    const auto fig = pi1_quotient_bound(corpus::cut_square_pair(0, 0, 0, 0));
    CHECK(fig.free_rank == 1);
    CHECK(fig.torsion.empty());
    CHECK(pi1_quotient_bound(segment_pair_z2()) == AbelianGroup{0, {Int(2)}});
    SUBCASE("free rank is the corank of xi, corpus-wide") {
        for (const auto& p : corpus::standard_pairs()) {
            const auto g = pi1_quotient_bound(p);
            CHECK(g.free_rank == p.torus_rank - rank_of(p));
            if (rank_of(p) == p.torus_rank) CHECK(g.finite());
        }
    }
}

TEST_CASE("moment-angle pair: worked examples") {
    const auto sq = moment_angle_pair(corpus::square());
    CHECK(sq.torus_rank == 4);
    CHECK(sq.k() == 2);
    CHECK(sq.xi == IntMatrix::identity(4));
    CHECK(moment_angle_pair(corpus::triangle()).k() == 1);
    CHECK(moment_angle_pair(corpus::pentagon()).k() == 3);
    SUBCASE("trivial bound and empty kernel") {
        for (std::size_t m = 3; m <= 7; ++m) {
            const auto p = moment_angle_pair(corpus::polygon(m));
            CHECK(pi1_quotient_bound(p).trivial());
            CHECK(kernel_subtorus(p).kernel.rank() == 0);
        }
    }
}

TEST_CASE("kernel subtorus and freeness") {
    SUBCASE("CP^2") {
        const auto report = kernel_subtorus(corpus::cp_pair(2));
        CHECK(report.kernel.rank() == 1);
        CHECK(lattice_contains(report.kernel, {Int(1), Int(1), Int(1)}));
        CHECK(report.free());
    }
    SUBCASE("cut-square pair has the rank-2 kernel") {
        const auto report = kernel_subtorus(corpus::cut_square_pair(0, 0, 0, 0));
        CHECK(report.kernel.rank() == 2);
        CHECK(lattice_contains(report.kernel, {Int(1), Int(1), Int(0), Int(-1)}));
        CHECK(lattice_contains(report.kernel, {Int(-1), Int(0), Int(1), Int(2)}));
        CHECK(report.free());
    }
    SUBCASE("freeness holds corpus-wide") {
        for (const auto& p : corpus::standard_pairs()) CHECK(kernel_subtorus(p).free());
    }
}

TEST_CASE("product with torus") {
    const auto p = corpus::cp_pair(2);
    CHECK(product_with_torus(p, 0).xi == p.xi);
    const auto padded = product_with_torus(p, 2);
    CHECK(padded.torus_rank == 4);
    CHECK(padded.k() == 2);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(padded.xi(2, j) == 0);
        CHECK(padded.xi(3, j) == 0);
    }
    CHECK(validate_pair(padded).empty());
}
