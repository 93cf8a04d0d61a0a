#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/simplicial.hpp>

using namespace cyctrace;
using simp::Idx;
using simp::SimplicialSet;

namespace {

std::vector<std::vector<int>> monotone_maps(int m, int n) {
    // all weakly monotone [m] -> [n]
    std::vector<std::vector<int>> out;
    std::vector<int> cur(m + 1, 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == m + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

TEST_CASE("builtin complexes validate") {
    for (int N : {0, 1, 3, 6}) {
        CAPTURE(N);
        CHECK(simp::validate(simp::make_point(N)).ok());
        CHECK(simp::validate(simp::make_circle(N)).ok());
        CHECK(simp::validate(simp::make_sphere2(N)).ok());
    }
    auto circle = simp::make_circle(3);
    CHECK(circle.counts == std::vector<Idx>{1, 2, 3, 4});
    auto sphere = simp::make_sphere2(3);
    CHECK(sphere.counts == std::vector<Idx>{1, 1, 2, 4});
}

TEST_CASE("empty complex validates vacuously") {
    SimplicialSet X;
    X.trunc = 2;
    X.counts = {0, 0, 0};
    X.faces.resize(3);
    X.degens.resize(3);
    X.faces[1].assign(2, {});
    X.faces[2].assign(3, {});
    X.degens[0].assign(1, {});
    X.degens[1].assign(2, {});
    CHECK(simp::validate(X).ok());
}

TEST_CASE("circle with identity t_1 fails cyclic validation") {
    auto X = simp::make_circle(3);
    // t_1 swaps the nondegenerate 1-cell and the degenerate one; flatten it
    X.cyclic[1] = {0, 1};
    auto rep = simp::validate(X);
    REQUIRE_FALSE(rep.ok());
    // with a one-point X_0 the face relations at degree 1 cannot distinguish
    // anything; the violation surfaces against the degeneracies at degree 1
    // and against d_i at degree 2
    bool deg1 = false;
    for (const auto& v : rep.violations) deg1 = deg1 || (v.degree == 1);
    CHECK(deg1);
    CHECK(rep.mentions("t_k"));
}

TEST_CASE("schema errors are distinct from identity violations") {
    auto X = simp::make_circle(2);
    X.faces[1][0][1] = 99;  // out of range
    auto rep = simp::validate(X);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().identity.rfind("schema", 0) == 0);

    auto Y = simp::make_circle(2);
    Y.faces[2][1].pop_back();  // map no longer total
    auto rep2 = simp::validate(Y);
    REQUIRE_FALSE(rep2.ok());
    CHECK(rep2.mentions("schema"));
}

TEST_CASE("nondegenerate simplices of the builtins") {
    auto circle = simp::make_circle(3);
    CHECK(simp::nondegenerate(circle, 0) == std::vector<Idx>{0});
    CHECK(simp::nondegenerate(circle, 1) == std::vector<Idx>{1});
    CHECK(simp::nondegenerate(circle, 2).empty());
    CHECK(simp::nondegenerate(circle, 3).empty());
    auto sphere = simp::make_sphere2(4);
    CHECK(simp::nondegenerate(sphere, 1).empty());
    CHECK(simp::nondegenerate(sphere, 2).size() == 1);
    CHECK(simp::nondegenerate(sphere, 3).empty());
}

TEST_CASE("apply_monotone generator cases") {
    auto X = simp::make_circle(3);
    const Idx tau = 1;  // the nondegenerate 1-cell

    SECTION("identity map") {
        auto [deg, x] = simp::apply_monotone(X, 1, tau, {0, 1});
        CHECK(deg == 1);
        CHECK(x == tau);
    }
    SECTION("cofaces act as faces") {
        for (int k = 1; k <= 3; ++k)
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    std::vector<int> delta;
                    for (int j = 0; j < k; ++j) delta.push_back(j < i ? j : j + 1);
                    auto [deg, y] = simp::apply_monotone(X, k, x, delta);
                    CHECK(deg == k - 1);
                    CHECK(y == X.face(k, i, x));
                }
    }
    SECTION("delta_0 . sigma_0 acts as s_0 d_0") {
        // the constant-1 map [1] -> [1]
        auto [deg, y] = simp::apply_monotone(X, 1, tau, {1, 1});
        CHECK(deg == 1);
        CHECK(y == X.degen(0, 0, X.face(1, 0, tau)));
        CHECK(y == 0);  // the degenerate 1-cell on the base vertex
    }
    SECTION("non-monotone rejected") {
        CHECK_THROWS_AS(simp::apply_monotone(X, 1, tau, {1, 0}), std::invalid_argument);
    }
}

TEST_CASE("apply_monotone is functorial") {
    auto check_functorial = [](const SimplicialSet& X, int top) {
        for (int p = 0; p <= top; ++p)
            for (int n = 0; n <= top; ++n)
                for (int m = 0; m <= top; ++m)
                    for (const auto& g : monotone_maps(n, p))
                        for (const auto& f : monotone_maps(m, n)) {
                            std::vector<int> gf(m + 1);
                            for (int i = 0; i <= m; ++i) gf[i] = g[f[i]];
                            for (Idx s = 0; s < X.counts[p]; ++s) {
                                auto one = simp::apply_monotone(X, p, s, gf);
                                auto via = simp::apply_monotone(
                                    X, n, simp::apply_monotone(X, p, s, g).second, f);
                                REQUIRE(one == via);
                            }
                        }
    };
    check_functorial(simp::make_circle(3), 3);
    check_functorial(simp::make_sphere2(4), 3);
}

TEST_CASE("simplicial map validation") {
    auto X = simp::make_circle(3);
    simp::SimplicialMap id;
    id.level.resize(4);
    for (int k = 0; k <= 3; ++k) {
        id.level[k].resize(X.counts[k]);
        for (Idx x = 0; x < X.counts[k]; ++x) id.level[k][x] = x;
    }
    CHECK(simp::validate_map(X, X, id, true).ok());
    id.level[1][1] = 0;  // no longer commutes with degeneracies/cyclic
    CHECK_FALSE(simp::validate_map(X, X, id, true).ok());
}
