#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/indexcat.hpp>

using namespace cyctrace;
using idx::IndexCategory;

TEST_CASE("index category at bound 1") {
    auto I = idx::build_index_category(1);
    CHECK(I.cat.n_obj() == 1);
    CHECK(I.cat.n_mor() == 1);
    CHECK(I.data[0].r == 1);
    CHECK(I.data[0].s == 1);
    CHECK(cat::validate_category(I.cat).ok());
}

TEST_CASE("index category relations at bound 12") {
    auto I = idx::build_index_category(12);
    CHECK(cat::validate_category(I.cat).ok());

    SECTION("identity law: (2,3) . id = (2,3)") {
        int m = I.find(12, 2, 3);
        REQUIRE(m >= 0);
        CHECK(I.cat.compose(I.find(2, 1, 1), m) == m);
        CHECK(I.cat.compose(m, I.find(12, 1, 1)) == m);
    }
    SECTION("F_2 . R_3 = R_3 . F_2 = (2,3) : 12 -> 2") {
        int fr = I.cat.compose(I.frobenius(2, 2), I.restriction(3, 4));
        int rf = I.cat.compose(I.restriction(3, 2), I.frobenius(2, 6));
        CHECK(fr == I.find(12, 2, 3));
        CHECK(rf == I.find(12, 2, 3));
    }
    SECTION("unique factorization") {
        for (std::size_t m = 0; m < I.data.size(); ++m) {
            auto [r, s] = idx::factor_unique(I, static_cast<int>(m));
            const auto& d = I.data[m];
            CHECK(d.m == r * d.n * s);
            // F_r after R_s reproduces the morphism
            CHECK(I.cat.compose(I.frobenius(r, d.n), I.restriction(s, r * d.n)) ==
                  static_cast<int>(m));
        }
        // hom(12, 2) has as many elements as 12/2 has divisors
        int count = 0;
        for (const auto& d : I.data)
            if (d.m == 12 && d.n == 2) ++count;
        CHECK(count == 4);  // divisors of 6
    }
    SECTION("pure Frobenius and pure restriction") {
        CHECK(idx::factor_unique(I, I.find(5, 5, 1)) == std::pair<int, int>{5, 1});
        CHECK(idx::factor_unique(I, I.find(5, 1, 5)) == std::pair<int, int>{1, 5});
        CHECK(idx::factor_unique(I, I.find(7, 1, 1)) == std::pair<int, int>{1, 1});
    }
}

TEST_CASE("grothendieck construction of the terminal functor recovers the base") {
    auto K = bar::monoid_category(bar::cyclic_group(3));
    auto F = idx::make_terminal_functor(K);
    CHECK(idx::validate_catfunctor(F).ok());
    auto G = idx::grothendieck_construct(F);
    CHECK(cat::validate_category(G.cat).ok());
    cat::Functor D;
    D.ob = {0};
    D.mor.resize(3);
    for (int m = 0; m < 3; ++m) D.mor[m] = G.mor(m, 0, 0);
    CHECK(cat::check_iso(K, G.cat, D).total_iso());
}

TEST_CASE("grothendieck construction of N acting on the divisibility category") {
    auto F = idx::make_nn_functor(6);
    CHECK(idx::validate_catfunctor(F).ok());
    auto G = idx::grothendieck_construct(F);
    CHECK(cat::validate_category(G.cat).ok());
    auto I = idx::build_index_category(6);
    CHECK(G.cat.n_obj() == I.cat.n_obj());
    CHECK(G.cat.n_mor() == I.cat.n_mor());
}

TEST_CASE("semidirect product law from the construction") {
    // Z/2 acting on Z/3 by inversion: (a1,b1)(a2,b2) = (a1+a2, b1^(a2)+b2)
    auto F = idx::make_action_functor(bar::cyclic_group(2), bar::cyclic_group(3),
                                      {{0, 1, 2}, {0, 2, 1}});
    REQUIRE(idx::validate_catfunctor(F).ok());
    auto G = idx::grothendieck_construct(F);
    CHECK(G.cat.n_mor() == 6);
    CHECK(cat::validate_category(G.cat).ok());
    auto mor = [&](int a, int b) { return G.mor(a, b, 0); };
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 3; ++b2) {
                    int lhs = G.cat.compose(mor(a1, b1), mor(a2, b2));
                    int twisted = a2 == 1 ? (3 - b1) % 3 : b1;
                    CHECK(lhs == mor((a1 + a2) % 2, (twisted + b2) % 3));
                }
}

TEST_CASE("the discrete skeleton of the circle-twisted category") {
    auto I = idx::build_index_category(4);
    auto F = idx::make_it_skeleton(I, 6);
    REQUIRE(idx::validate_catfunctor(F).ok());
    auto G = idx::grothendieck_construct(F);
    CHECK(cat::validate_category(G.cat).ok());
    // composition law (r1,s1,z1).(r2,s2,z2) = (r1 r2, s1 s2, z1^(r2) z2)
    for (int q = 0; q < G.cat.n_mor(); ++q)
        for (int p = 0; p < G.cat.n_mor(); ++p) {
            if (!G.cat.composable(q, p)) continue;
            auto [k1, z1] = G.mor_data[q];
            auto [k2, z2] = G.mor_data[p];
            int kk = I.cat.compose(k1, k2);
            REQUIRE(kk >= 0);
            int zz = (z1 * I.data[k2].r + z2) % 6;
            CHECK(G.cat.compose(q, p) == G.mor(kk, zz, G.cat.mors[q].dst));
        }
}

TEST_CASE("functor-law violations are reported before construction") {
    auto F = idx::make_action_functor(bar::cyclic_group(2), bar::cyclic_group(3),
                                      {{0, 1, 2}, {0, 2, 2}});  // not a homomorphism
    CHECK_FALSE(idx::validate_catfunctor(F).ok());
    CHECK_THROWS_AS(idx::grothendieck_construct(F), SchemaError);
}

TEST_CASE("comma category of the divisibility instance over n = 2") {
    auto F = idx::make_nn_functor(12);
    auto comma = cat::comma_over(F.fiber[0], 1);  // object "2"
    CHECK(comma.cat.n_obj() == 6);  // m = 2s <= 12
    CHECK(cat::validate_category(comma.cat).ok());
}

TEST_CASE("theta for the constant terminal functor") {
    auto F = idx::make_terminal_functor(bar::monoid_category(bar::cyclic_group(2)));
    auto rep = idx::check_theta_iso(F);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.theta_functor_ok);
    CHECK(rep.theta_iso);
    CHECK(rep.theta_total);
    CHECK(rep.implication_ok);
}

TEST_CASE("theta for a group action and the collapsing negative control") {
    auto F = idx::make_action_functor(bar::cyclic_group(2), bar::cyclic_group(3),
                                      {{0, 1, 2}, {0, 2, 1}});
    auto rep = idx::check_theta_iso(F);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.theta_iso);
    CHECK(rep.implication_ok);

    auto Bad = idx::make_action_functor(bar::idempotent2(), bar::cyclic_group(2), {{0, 1}, {0, 0}});
    auto repBad = idx::check_theta_iso(Bad);
    CHECK_FALSE(repBad.hypothesis_ok);
    CHECK_FALSE(repBad.hypothesis_witness.empty());
    CHECK(repBad.implication_ok);  // vacuous
}

TEST_CASE("theta for the bounded divisibility instance") {
    auto rep = idx::check_theta_iso(idx::make_nn_functor(8));
    CHECK(rep.hypothesis_ok);
    CHECK(rep.theta_functor_ok);
    CHECK(rep.theta_iso);
    CHECK(rep.implication_ok);
    CHECK_FALSE(rep.hypothesis_total);  // truncation gaps are expected and tracked
}

TEST_CASE("kan scaffolding") {
    SECTION("constant terminal functor") {
        auto F = idx::make_terminal_functor(bar::monoid_category(bar::cyclic_group(3)));
        auto rep = idx::verify_kan_scaffold(F, 0);
        CHECK(rep.functors_ok);
        CHECK(rep.lift_ok);
        CHECK(rep.adjunction_ok);
        CHECK(rep.transform_ok);
        CHECK(rep.phi_psi_ok);
        CHECK(rep.pass());
    }
    SECTION("group action") {
        auto F = idx::make_action_functor(bar::cyclic_group(2), bar::cyclic_group(3),
                                          {{0, 1, 2}, {0, 2, 1}});
        CHECK(idx::verify_kan_scaffold(F, 0).pass());
    }
    SECTION("divisibility instance at bound 6") {
        auto rep = idx::verify_kan_scaffold(idx::make_nn_functor(6), 0);
        CHECK(rep.pass());
    }
    SECTION("corrupted composition table fails with a witness") {
        auto F = idx::make_action_functor(bar::cyclic_group(2), bar::cyclic_group(3),
                                          {{0, 1, 2}, {0, 2, 1}});
        F.fiber[0].comp[1][1] = 1;  // corrupt 1+1
        auto rep = idx::verify_kan_scaffold(F, 0);
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.witness.empty());
    }
}
