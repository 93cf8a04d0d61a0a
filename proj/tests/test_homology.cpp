#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/barcat.hpp>
#include <cyctrace/homology.hpp>
#include <cyctrace/subdivision.hpp>

using namespace cyctrace;
using hom::IntMat;
using rings::Int;

namespace {

/// Cofactor-expansion determinant: the independent oracle for the invariant
/// factor product of square matrices.
Int naive_det(const IntMat& M) {
    REQUIRE(M.rows == M.cols);
    if (M.rows == 0) return 1;
    if (M.rows == 1) return M.at(0, 0);
    Int acc = 0;
    for (int c = 0; c < M.cols; ++c) {
        if (M.at(0, c) == 0) continue;
        IntMat sub(M.rows - 1, M.cols - 1);
        for (int r = 1; r < M.rows; ++r)
            for (int cc = 0, k = 0; cc < M.cols; ++cc) {
                if (cc == c) continue;
                sub.at(r - 1, k++) = M.at(r, cc);
            }
        Int term = M.at(0, c) * naive_det(sub);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
    SECTION("[[2,4],[6,8]] -> (2,4)") {
        IntMat M(2, 2);
        M.at(0, 0) = 2;
        M.at(0, 1) = 4;
        M.at(1, 0) = 6;
        M.at(1, 1) = 8;
        auto f = hom::smith_normal_form(M);
        REQUIRE(f.size() == 2);
        CHECK(f[0] == 2);
        CHECK(f[1] == 4);
    }
    SECTION("zero matrix -> ()") {
        CHECK(hom::smith_normal_form(IntMat(3, 2)).empty());
    }
    SECTION("identity -> (1,1,1)") {
        IntMat M(3, 3);
        for (int i = 0; i < 3; ++i) M.at(i, i) = 1;
        auto f = hom::smith_normal_form(M);
        CHECK(f == std::vector<Int>{1, 1, 1});
    }
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        IntMat M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M.at(i, j) = rng.range(-6, 6);
        auto f = hom::smith_normal_form(M);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i] > 0);
            CHECK(f[i + 1] % f[i] == 0);
        }
        Int d = naive_det(M);
        if (d != 0) {
            REQUIRE(f.size() == static_cast<std::size_t>(n));
            Int prod = 1;
            for (const auto& v : f) prod *= v;
            CHECK(prod == abs(d));
        } else {
            CHECK(f.size() < static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("homology of the builtin complexes") {
    auto circle = simp::make_circle(4);
    CHECK(hom::homology(circle, 0) == hom::HomologyGroup{1, {}});
    CHECK(hom::homology(circle, 1) == hom::HomologyGroup{1, {}});
    CHECK(hom::homology(circle, 2) == hom::HomologyGroup{0, {}});
    auto sphere = simp::make_sphere2(4);
    CHECK(hom::homology(sphere, 0) == hom::HomologyGroup{1, {}});
    CHECK(hom::homology(sphere, 1) == hom::HomologyGroup{0, {}});
    CHECK(hom::homology(sphere, 2) == hom::HomologyGroup{1, {}});
    auto point = simp::make_point(3);
    CHECK(hom::homology(point, 0) == hom::HomologyGroup{1, {}});
    CHECK(hom::homology(point, 1) == hom::HomologyGroup{0, {}});
}

TEST_CASE("top-degree homology is refused") {
    auto circle = simp::make_circle(3);
    CHECK_THROWS_AS(hom::homology(circle, 3), std::invalid_argument);
    CHECK_THROWS_AS(hom::homology(circle, -1), std::invalid_argument);
}

TEST_CASE("classifying-space homology carries the group as torsion") {
    for (int n : {2, 3, 4}) {
        CAPTURE(n);
        auto Nv = bar::nerve(bar::monoid_category(bar::cyclic_group(n)), 3);
        CHECK(hom::homology(Nv.X, 0) == hom::HomologyGroup{1, {}});
        auto H1 = hom::homology(Nv.X, 1);
        CHECK(H1.betti == 0);
        REQUIRE(H1.torsion.size() == 1);
        CHECK(H1.torsion[0] == n);
    }
}

TEST_CASE("cyclic bar of Z/3 splits into three classifying spaces") {
    auto B = bar::cyclic_bar(bar::monoid_category(bar::cyclic_group(3)), 3);
    CHECK(hom::homology(B.X, 0) == hom::HomologyGroup{3, {}});
    auto H1 = hom::homology(B.X, 1);
    CHECK(H1.betti == 0);
    CHECK(H1.torsion == std::vector<Int>{3, 3, 3});
}

TEST_CASE("subdivision preserves homology (shadow of the homeomorphism)") {
    auto circle = simp::make_circle(7);
    for (int r : {2, 3}) {
        auto S = subdiv::edgewise_subdivide(circle, r);
        for (int k = 0; k <= S.result.trunc - 1; ++k)
            CHECK(hom::homology(S.result, k) == hom::homology(circle, k));
    }
    auto sphere = simp::make_sphere2(7);
    auto S = subdiv::edgewise_subdivide(sphere, 2);
    for (int k = 0; k <= S.result.trunc - 1; ++k)
        CHECK(hom::homology(S.result, k) == hom::homology(sphere, k));
}

TEST_CASE("H_0 of the cyclic bar counts conjugacy classes three ways") {
    auto M = bar::symmetric_s3();
    auto B = bar::cyclic_bar(bar::monoid_category(M), 2);
    auto H0 = hom::homology(B.X, 0);
    CHECK(H0.betti == 3);
    CHECK(H0.torsion.empty());
    CHECK(hom::skeleton_components(B.X) == 3);
    CHECK(bar::conjugacy_class_count(M) == 3);
    CHECK(bar::conjugacy_class_count(bar::cyclic_group(4)) == 4);
    CHECK_THROWS_AS(bar::conjugacy_class_count(bar::idempotent2()), std::invalid_argument);
}
