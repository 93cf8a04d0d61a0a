#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/cubes.hpp>

using namespace cyctrace;

TEST_CASE("empty U: h is the identity and trivially consistent") {
    auto h = cube::expand_h({});
    REQUIRE(h.terms.size() == 1);
    CHECK(h.terms[0].d == 1);
    CHECK(h.terms[0].dbar == 1);
    auto rep = cube::verify_cube_face_relations({});
    CHECK(rep.all_pass());
}

TEST_CASE("one prime: lower face is D_p, upper face is Dbar_p") {
    auto h = cube::expand_h({5});
    auto lower = cube::lower_face(h, {5});
    REQUIRE(lower.terms.size() == 1);
    CHECK(lower.terms[0].d == 5);
    CHECK(lower.terms[0].dbar == 1);
    auto upper = cube::upper_face(h, {5});
    REQUIRE(upper.terms.size() == 1);
    CHECK(upper.terms[0].d == 1);
    CHECK(upper.terms[0].dbar == 5);
}

TEST_CASE("two primes: the displayed four-term expansion") {
    auto h = cube::expand_h({2, 3});
    REQUIRE(h.terms.size() == 4);
    // (1-t_p)(1-t_q) D_pq + (1-t_p)t_q Dbar_q D_p + t_p(1-t_q) Dbar_p D_q + t_p t_q Dbar_pq
    bool seen_ll = false, seen_lu = false, seen_ul = false, seen_uu = false;
    for (const auto& t : h.terms) {
        if (t.upper.empty()) seen_ll = t.d == 6 && t.dbar == 1;
        if (t.upper == std::set<int>{3}) seen_lu = t.d == 2 && t.dbar == 3;
        if (t.upper == std::set<int>{2}) seen_ul = t.d == 3 && t.dbar == 2;
        if (t.upper == std::set<int>{2, 3}) seen_uu = t.d == 1 && t.dbar == 6;
    }
    CHECK(seen_ll);
    CHECK(seen_lu);
    CHECK(seen_ul);
    CHECK(seen_uu);
    auto rep = cube::verify_cube_face_relations({2, 3});
    CHECK(rep.entries.size() == 4);
    CHECK(rep.all_pass());
}

TEST_CASE("face relations hold for all U within {2,3,5} and for |U|=4") {
    for (int mask = 0; mask < 8; ++mask) {
        std::set<int> U;
        if (mask & 1) U.insert(2);
        if (mask & 2) U.insert(3);
        if (mask & 4) U.insert(5);
        CAPTURE(mask);
        CHECK(cube::verify_cube_face_relations(U).all_pass());
    }
    CHECK(cube::verify_cube_face_relations({2, 3, 5, 7}).all_pass());
}

TEST_CASE("expansion size guard") {
    CHECK_THROWS_AS(cube::verify_cube_face_relations({2, 3, 5, 7, 11, 13, 17}),
                    std::invalid_argument);
}

TEST_CASE("a wrong face would be detected") {
    // substituting on the wrong side must not satisfy the lower-face relation
    auto h = cube::expand_h({2, 3});
    auto wrong = cube::upper_face(h, {2});
    auto rhs = cube::precompose_d(cube::expand_h({3}), {2});
    CHECK_FALSE(wrong == rhs);
}
