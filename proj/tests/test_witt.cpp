#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/witt_diagram.hpp>

using namespace cyctrace;
using rings::Int;
using rings::ZRing;
using rings::ZmodRing;
using witt::SeriesPolicy;
using witt::WittVec;

namespace {

ZRing Z;

WittVec<ZRing> zvec(const witt::TruncationSet& S, std::vector<long long> coords) {
    WittVec<ZRing> x{S, {}};
    for (auto c : coords) x.a.push_back(Int(c));
    REQUIRE(x.a.size() == S.elems.size());
    return x;
}

}  // namespace

TEST_CASE("truncation sets") {
    CHECK(witt::divisor_trunc(12).elems == std::vector<int>{1, 2, 3, 4, 6, 12});
    CHECK(witt::quotient_trunc(witt::divisor_trunc(12), 2).elems ==
          std::vector<int>{1, 2, 3, 6});
    CHECK(witt::quotient_trunc(witt::divisor_trunc(12), 4).elems == std::vector<int>{1, 3});
    CHECK(witt::quotient_trunc(witt::divisor_trunc(12), 5).elems.empty());
    CHECK_THROWS_AS(witt::make_trunc({2, 4}), SchemaError);
}

TEST_CASE("from_series on pinned inputs") {
    auto S4 = witt::divisor_trunc(4);
    SECTION("the constant series 1 gives zero") {
        auto x = witt::from_series(Z, series::series_one(Z, 4), S4);
        CHECK(witt::witt_eq(Z, x, witt::witt_zero(Z, S4)));
    }
    SECTION("1 - a t is the Teichmuller lift") {
        auto f = series::series_binomial_factor(Z, Int(7), 1, 1, 4);
        auto x = witt::from_series(Z, f, S4);
        CHECK(witt::witt_eq(Z, x, witt::teichmuller(Z, S4, Int(7))));
    }
    SECTION("1 - 2t + t^2 over <2> gives (2,-1)") {
        auto f = series::series_zero(Z, 2);
        f.c = {Int(1), Int(-2), Int(1)};
        auto x = witt::from_series(Z, f, witt::divisor_trunc(2));
        CHECK(witt::witt_eq(Z, x, zvec(witt::divisor_trunc(2), {2, -1})));
    }
    SECTION("round trip through to_series") {
        Rng rng(99);
        auto S12 = witt::divisor_trunc(12);
        for (int t = 0; t < 50; ++t) {
            auto x = witt::random_witt(Z, S12, rng);
            auto back = witt::from_series(Z, witt::to_series(Z, x), S12);
            CHECK(witt::witt_eq(Z, x, back));
        }
    }
}

TEST_CASE("strict policy reports exponents outside the truncation set") {
    auto S4 = witt::divisor_trunc(4);
    auto f = series::series_one(Z, 4);
    f.c[3] = Int(-1);  // 1 - t^3: exponent 3 has no slot in <4>
    CHECK_THROWS_AS(witt::from_series(Z, f, S4, SeriesPolicy::Strict), SpanError);
    try {
        witt::from_series(Z, f, S4, SeriesPolicy::Strict);
    } catch (const SpanError& e) {
        CHECK(e.exponent == 3);
    }
    // the quotient policy divides the factor out: all retained coords vanish
    auto q = witt::from_series(Z, f, S4, SeriesPolicy::Quotient);
    CHECK(witt::witt_eq(Z, q, witt::witt_zero(Z, S4)));
}

TEST_CASE("ghost coordinates") {
    auto S4 = witt::divisor_trunc(4);
    auto w = witt::ghost(Z, witt::teichmuller(Z, S4, Int(3)));
    CHECK(w == std::vector<Int>{Int(3), Int(9), Int(81)});
    auto w2 = witt::ghost(Z, zvec(witt::divisor_trunc(2), {2, -1}));
    CHECK(w2 == std::vector<Int>{Int(2), Int(2)});
    auto w3 = witt::ghost(Z, zvec(S4, {0, 1, 0}));
    CHECK(w3 == std::vector<Int>{Int(0), Int(2), Int(2)});
}

TEST_CASE("addition examples") {
    auto S2 = witt::divisor_trunc(2);
    SECTION("(1,0) + (1,0) = (2,-1)") {
        auto one = zvec(S2, {1, 0});
        CHECK(witt::witt_eq(Z, witt::witt_add(Z, one, one), zvec(S2, {2, -1})));
    }
    SECTION("x + 0 = x") {
        auto x = zvec(S2, {3, 5});
        CHECK(witt::witt_eq(Z, witt::witt_add(Z, x, witt::witt_zero(Z, S2)), x));
    }
    SECTION("x + (-x) = 0 for x = (3,5)") {
        auto x = zvec(S2, {3, 5});
        CHECK(witt::witt_eq(Z, witt::witt_add(Z, x, witt::witt_neg(Z, x)),
                            witt::witt_zero(Z, S2)));
    }
}

TEST_CASE("multiplication examples") {
    auto S4 = witt::divisor_trunc(4);
    SECTION("teichmuller(1) is the unit") {
        auto x = zvec(S4, {2, -3, 5});
        CHECK(witt::witt_eq(Z, witt::witt_mul(Z, x, witt::teichmuller(Z, S4, Int(1))), x));
    }
    SECTION("(0,1,0)^2 = (0,2,-1) with ghost (0,4,4)") {
        auto x = zvec(S4, {0, 1, 0});
        auto p = witt::witt_mul(Z, x, x);
        CHECK(witt::witt_eq(Z, p, zvec(S4, {0, 2, -1})));
        CHECK(witt::ghost(Z, p) == std::vector<Int>{Int(0), Int(4), Int(4)});
    }
    SECTION("the same product over Z/5 reduces coordinatewise") {
        ZmodRing Z5(5);
        WittVec<ZmodRing> x{S4, {0, 1, 0}};
        auto p = witt::witt_mul(Z5, x, x);
        CHECK(p.a == std::vector<std::uint64_t>{0, 2, 4});
    }
}

TEST_CASE("frobenius examples") {
    auto S4 = witt::divisor_trunc(4);
    SECTION("F_1 = id") {
        auto x = zvec(S4, {4, -1, 2});
        CHECK(witt::witt_eq(Z, witt::frobenius_witt(Z, x, 1), x));
    }
    SECTION("F_2 (0,1,0) = (2,-1)") {
        auto y = witt::frobenius_witt(Z, zvec(S4, {0, 1, 0}), 2);
        CHECK(witt::witt_eq(Z, y, zvec(witt::divisor_trunc(2), {2, -1})));
    }
    SECTION("F_2 teichmuller(a) = teichmuller(a^2)") {
        auto S8 = witt::divisor_trunc(8);
        auto y = witt::frobenius_witt(Z, witt::teichmuller(Z, S8, Int(3)), 2);
        CHECK(witt::witt_eq(Z, y, witt::teichmuller(Z, witt::divisor_trunc(4), Int(9))));
    }
    SECTION("empty quotient set gives the zero ring") {
        auto y = witt::frobenius_witt(Z, zvec(S4, {1, 2, 3}), 5);
        CHECK(y.S.elems.empty());
        CHECK(y.a.empty());
    }
}

TEST_CASE("verschiebung examples") {
    SECTION("V_2 teichmuller from {1} into <2> is (0,a)") {
        auto x = witt::teichmuller(Z, witt::divisor_trunc(1), Int(5));
        auto y = witt::verschiebung_witt(Z, x, 2, witt::divisor_trunc(2));
        CHECK(witt::witt_eq(Z, y, zvec(witt::divisor_trunc(2), {0, 5})));
    }
    SECTION("V_1 = id") {
        auto S4 = witt::divisor_trunc(4);
        auto x = zvec(S4, {1, 2, 3});
        CHECK(witt::witt_eq(Z, witt::verschiebung_witt(Z, x, 1, S4), x));
    }
    SECTION("ghost(V_2 teich(1)) = (0,2)") {
        auto x = witt::teichmuller(Z, witt::divisor_trunc(1), Int(1));
        auto y = witt::verschiebung_witt(Z, x, 2, witt::divisor_trunc(2));
        CHECK(witt::ghost(Z, y) == std::vector<Int>{Int(0), Int(2)});
    }
    SECTION("ghost law at every index") {
        Rng rng(5);
        auto T = witt::divisor_trunc(6);
        auto S = witt::divisor_trunc(12);
        for (int t = 0; t < 30; ++t) {
            auto x = witt::random_witt(Z, T, rng);
            auto w = witt::ghost(Z, witt::verschiebung_witt(Z, x, 2, S));
            auto wx = witt::ghost(Z, x);
            for (int i = 0; i < S.size(); ++i) {
                int n = S.elems[i];
                Int expect = (n % 2 == 0) ? Int(2) * wx[T.position(n / 2)] : Int(0);
                CHECK(w[i] == expect);
            }
        }
    }
}

TEST_CASE("restriction examples") {
    auto S4 = witt::divisor_trunc(4);
    auto x = zvec(S4, {0, 2, -1});
    SECTION("restrict to the full set is the identity") {
        CHECK(witt::witt_eq(Z, witt::restrict_witt(Z, x, S4), x));
    }
    SECTION("projection to <2>") {
        CHECK(witt::witt_eq(Z, witt::restrict_witt(Z, x, witt::divisor_trunc(2)),
                            zvec(witt::divisor_trunc(2), {0, 2})));
    }
    SECTION("restriction is additive (randomized over Z/6)") {
        ZmodRing Z6(6);
        Rng rng(17);
        auto S12 = witt::divisor_trunc(12);
        auto T = witt::divisor_trunc(6);
        for (int t = 0; t < 50; ++t) {
            auto a = witt::random_witt(Z6, S12, rng, 0, 5);
            auto b = witt::random_witt(Z6, S12, rng, 0, 5);
            auto lhs = witt::restrict_witt(Z6, witt::witt_add(Z6, a, b), T);
            auto rhs = witt::witt_add(Z6, witt::restrict_witt(Z6, a, T),
                                      witt::restrict_witt(Z6, b, T));
            CHECK(witt::witt_eq(Z6, lhs, rhs));
        }
    }
}

TEST_CASE("operations commute with reduction mod m (universal polynomials)") {
    ZmodRing Z6(6);
    Rng rng(23);
    auto S = witt::divisor_trunc(12);
    auto reduce = [&](const WittVec<ZRing>& x) {
        WittVec<ZmodRing> y{x.S, {}};
        for (const auto& c : x.a) {
            Int rem = c % 6;
            if (rem < 0) rem += 6;
            y.a.push_back(Z6.from_int(rem.convert_to<long long>()));
        }
        return y;
    };
    for (int t = 0; t < 40; ++t) {
        auto a = witt::random_witt(Z, S, rng);
        auto b = witt::random_witt(Z, S, rng);
        CHECK(witt::witt_eq(Z6, reduce(witt::witt_add(Z, a, b)),
                            witt::witt_add(Z6, reduce(a), reduce(b))));
        CHECK(witt::witt_eq(Z6, reduce(witt::witt_mul(Z, a, b)),
                            witt::witt_mul(Z6, reduce(a), reduce(b))));
        for (int r : {2, 3})
            CHECK(witt::witt_eq(Z6, reduce(witt::frobenius_witt(Z, a, r)),
                                witt::frobenius_witt(Z6, reduce(a), r)));
    }
}

TEST_CASE("frobenius is a ring homomorphism intertwining ghost dilation") {
    Rng rng(31);
    auto S = witt::divisor_trunc(12);
    for (int t = 0; t < 30; ++t) {
        auto a = witt::random_witt(Z, S, rng, -4, 4);
        auto b = witt::random_witt(Z, S, rng, -4, 4);
        for (int r : {2, 3, 4}) {
            auto lhs = witt::frobenius_witt(Z, witt::witt_add(Z, a, b), r);
            auto rhs = witt::witt_add(Z, witt::frobenius_witt(Z, a, r),
                                      witt::frobenius_witt(Z, b, r));
            CHECK(witt::witt_eq(Z, lhs, rhs));
            auto lhm = witt::frobenius_witt(Z, witt::witt_mul(Z, a, b), r);
            auto rhm = witt::witt_mul(Z, witt::frobenius_witt(Z, a, r),
                                      witt::frobenius_witt(Z, b, r));
            CHECK(witt::witt_eq(Z, lhm, rhm));
        }
    }
}

TEST_CASE("ring axioms over the rationals") {
    rings::QRing Q;
    auto rep = witt::witt_law_suite(Q, witt::divisor_trunc(6), 40, 7);
    CHECK(rep.all_pass());
}

TEST_CASE("law suite over small rings") {
    CHECK(witt::witt_law_suite(Z, witt::divisor_trunc(12), 60, 11).all_pass());
    CHECK(witt::witt_law_suite(ZmodRing(4), witt::divisor_trunc(12), 60, 13).all_pass());
}

TEST_CASE("index diagram over Z/4 passes; corrupted actions fail") {
    ZmodRing Z4(4);
    auto good = witt::check_index_diagram(Z4, 12, 25, 101);
    CHECK(good.all_pass());
    auto swapped = witt::check_index_diagram(Z4, 12, 25, 101,
                                             witt::DiagramCorruption::SwapFrobeniusRestriction);
    CHECK_FALSE(swapped.all_pass());
    CHECK_FALSE(swapped.generator_pins);
    auto dropped = witt::check_index_diagram(Z4, 12, 25, 101,
                                             witt::DiagramCorruption::DropFrobenius);
    CHECK_FALSE(dropped.all_pass());
}

TEST_CASE("identity morphisms act as the identity") {
    auto I = idx::build_index_category(12);
    Rng rng(3);
    for (int n = 1; n <= 12; ++n) {
        auto x = witt::random_witt(Z, witt::divisor_trunc(n), rng);
        auto y = witt::index_action(Z, I, I.find(n, 1, 1), x);
        CHECK(witt::witt_eq(Z, x, y));
    }
}
