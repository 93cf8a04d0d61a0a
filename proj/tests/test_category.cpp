#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/barcat.hpp>
#include <cyctrace/category.hpp>

using namespace cyctrace;
using cat::FinCategory;

TEST_CASE("monoid categories validate") {
    CHECK(cat::validate_category(bar::monoid_category(bar::cyclic_group(3))).ok());
    CHECK(cat::validate_category(bar::monoid_category(bar::symmetric_s3())).ok());
    CHECK(cat::validate_category(bar::monoid_category(bar::idempotent2())).ok());
}

TEST_CASE("a corrupted composite is reported with the witness triple") {
    auto C = bar::monoid_category(bar::cyclic_group(3));
    C.comp[1][1] = 1;  // 1+1 = 1 is wrong
    auto rep = cat::validate_category(C);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.mentions("associativity"));
}

TEST_CASE("a two-object groupoid validates and is groupoid-like") {
    // two objects, an isomorphism between them
    FinCategory C;
    C.objects = {"a", "b"};
    C.mors = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}, {"g", 1, 0}};
    C.identity = {0, 1};
    C.comp.assign(4, std::vector<int>(4, -1));
    auto set = [&](int gg, int ff, int h) { C.comp[gg][ff] = h; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2);  // f . id_a = f
    set(1, 2, 2);  // id_b . f = f
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0);  // g . f = id_a
    set(2, 3, 1);  // f . g = id_b
    CHECK(cat::validate_category(C).ok());
    CHECK(bar::is_groupoid_like(C));
}

TEST_CASE("groupoid-like detection") {
    CHECK(bar::is_groupoid_like(bar::monoid_category(bar::cyclic_group(2))));
    CHECK(bar::is_groupoid_like(bar::monoid_category(bar::trivial_monoid())));
    CHECK_FALSE(bar::is_groupoid_like(bar::monoid_category(bar::idempotent2())));
}

TEST_CASE("comma categories") {
    SECTION("trivial category over its object is trivial") {
        auto T = bar::monoid_category(bar::trivial_monoid());
        auto comma = cat::comma_over(T, 0);
        CHECK(comma.cat.n_obj() == 1);
        CHECK(comma.cat.n_mor() == 1);
        CHECK(cat::validate_category(comma.cat).ok());
    }
    SECTION("a group over its object is the translation groupoid") {
        auto G = bar::monoid_category(bar::cyclic_group(4));
        auto comma = cat::comma_over(G, 0);
        CHECK(comma.cat.n_obj() == 4);
        // exactly one morphism between any two objects (contractible shape)
        CHECK(comma.cat.n_mor() == 16);
        CHECK(cat::validate_category(comma.cat).ok());
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                int count = 0;
                for (int m = 0; m < comma.cat.n_mor(); ++m)
                    if (comma.cat.mors[m].src == a && comma.cat.mors[m].dst == b) ++count;
                CHECK(count == 1);
            }
    }
}

TEST_CASE("product category validates") {
    auto A = bar::monoid_category(bar::cyclic_group(2));
    auto B = bar::monoid_category(bar::cyclic_group(3));
    auto P = cat::product_category(A, B);
    CHECK(P.n_obj() == 1);
    CHECK(P.n_mor() == 6);
    CHECK(cat::validate_category(P).ok());
}

TEST_CASE("functor and isomorphism checks") {
    auto Z2 = bar::monoid_category(bar::cyclic_group(2));
    auto Z4 = bar::monoid_category(bar::cyclic_group(4));
    cat::Functor doubling;  // Z/2 -> Z/4, 1 -> 2
    doubling.ob = {0};
    doubling.mor = {0, 2};
    CHECK(cat::check_functor(Z2, Z4, doubling).ok());
    auto verdict = cat::check_iso(Z2, Z4, doubling);
    CHECK(verdict.functor_laws);
    CHECK(verdict.injective);
    CHECK_FALSE(verdict.surjective);

    cat::Functor broken;
    broken.ob = {0};
    broken.mor = {0, 1};  // 1 -> 1 is not a homomorphism into Z/4
    CHECK_FALSE(cat::check_functor(Z2, Z4, broken).ok());
}
