#include <catch2/catch_amalgamated.hpp>

#include <cyctrace/trace.hpp>

using namespace cyctrace;
using rings::Int;
using rings::ZRing;
using rings::ZmodRing;

namespace {

ZRing Z;

tr::Mat<ZRing> zmat(std::vector<std::vector<long long>> rows) {
    tr::Mat<ZRing> A(Z, static_cast<int>(rows.size()));
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) A.at(i, j) = Int(rows[i][j]);
    return A;
}

/// Naive polynomial-matrix determinant of (I - tA) by cofactor expansion:
/// the independent oracle for the Berkowitz route.  Polynomials are dense
/// coefficient vectors truncated at t^N.
template <class R>
std::vector<typename R::Elem> naive_char_series(const R& ring, const tr::Mat<R>& A, int N) {
    using Poly = std::vector<typename R::Elem>;
    auto pzero = [&] { return Poly(N + 1, ring.zero()); };
    auto padd = [&](const Poly& a, const Poly& b) {
        Poly c = pzero();
        for (int i = 0; i <= N; ++i) c[i] = ring.add(a[i], b[i]);
        return c;
    };
    auto pmul = [&](const Poly& a, const Poly& b) {
        Poly c = pzero();
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                c[i + j] = ring.add(c[i + j], ring.mul(a[i], b[j]));
        return c;
    };
    auto pneg = [&](Poly a) {
        for (auto& v : a) v = ring.neg(v);
        return a;
    };
    // entries of I - tA
    std::vector<std::vector<Poly>> M(A.n, std::vector<Poly>(A.n, pzero()));
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            if (N >= 1) M[i][j][1] = ring.neg(A.at(i, j));
            if (i == j) M[i][j][0] = ring.one();
        }
    auto det = [&](auto&& self, std::vector<int> rows, std::vector<int> cols) -> Poly {
        if (rows.empty()) {
            Poly one = pzero();
            one[0] = ring.one();
            return one;
        }
        Poly acc = pzero();
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::vector<int> subr(rows.begin() + 1, rows.end());
            std::vector<int> subc;
            for (std::size_t cc = 0; cc < cols.size(); ++cc)
                if (cc != c) subc.push_back(cols[cc]);
            Poly term = pmul(M[rows[0]][cols[c]], self(self, subr, subc));
            acc = padd(acc, (c % 2 == 0) ? term : pneg(term));
        }
        return acc;
    };
    std::vector<int> idx(A.n);
    for (int i = 0; i < A.n; ++i) idx[i] = i;
    return det(det, idx, idx);
}

}  // namespace

TEST_CASE("char_series pinned cases") {
    CHECK(series::series_str(Z, tr::char_series(Z, zmat({{1}}), 3)) == "1 + -1*t^1 (mod t^4)");
    auto swap = zmat({{0, 1}, {1, 0}});
    auto f = tr::char_series(Z, swap, 4);
    CHECK(f.c == std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(0)});
    auto nil = tr::char_series(Z, zmat({{0, 1}, {0, 0}}), 4);
    CHECK(nil.c == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(0)});
}

TEST_CASE("berkowitz agrees with the cofactor oracle") {
    Rng rng(2025);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        auto A = tr::random_matrix(Z, rng, n, -3, 3);
        auto f = tr::char_series(Z, A, n);
        auto g = naive_char_series(Z, A, n);
        CHECK(f.c == g);
    }
    ZmodRing Z6(6);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(4));
        auto A = tr::random_matrix(Z6, rng, n, 0, 5);
        auto f = tr::char_series(Z6, A, n);
        auto g = naive_char_series(Z6, A, n);
        CHECK(f.c == g);
    }
}

TEST_CASE("determinant from the characteristic polynomial") {
    CHECK(tr::det_of(Z, zmat({{0, 1}, {1, 0}})) == -1);
    CHECK(tr::det_of(Z, zmat({{2, 0}, {0, 3}})) == 6);
    CHECK(tr::det_of(Z, zmat({{1, 2}, {3, 4}})) == -2);
}

TEST_CASE("trc0 pinned cases") {
    auto S4 = witt::divisor_trunc(4);
    SECTION("[1] is the Teichmuller lift of 1") {
        auto x = tr::trc0(Z, zmat({{1}}), S4);
        CHECK(witt::witt_eq(Z, x, witt::teichmuller(Z, S4, Int(1))));
    }
    SECTION("the swap has coordinates (0,1,0) and ghost (0,2,2)") {
        auto x = tr::trc0(Z, zmat({{0, 1}, {1, 0}}), S4);
        CHECK(x.a == std::vector<Int>{Int(0), Int(1), Int(0)});
        CHECK(witt::ghost(Z, x) == std::vector<Int>{Int(0), Int(2), Int(2)});
    }
    SECTION("worked chain: F_2 trc0(swap) = (2,-1) = trc0(I_2)") {
        auto x = tr::trc0(Z, zmat({{0, 1}, {1, 0}}), S4);
        auto fx = witt::frobenius_witt(Z, x, 2);
        CHECK(fx.a == std::vector<Int>{Int(2), Int(-1)});
        auto id2 = tr::trc0(Z, tr::mat_identity(Z, 2), witt::divisor_trunc(2));
        CHECK(witt::witt_eq(Z, fx, id2));
    }
    SECTION("non-invertible matrices are refused unless overridden") {
        auto nil = zmat({{0, 1}, {0, 0}});
        CHECK_THROWS_AS(tr::trc0(Z, nil, S4), std::invalid_argument);
        auto x = tr::trc0(Z, nil, S4, true);
        CHECK(witt::witt_eq(Z, x, witt::witt_zero(Z, S4)));
    }
    SECTION("exponents outside S are quotiented away and reported") {
        // a 3-cycle: det(1 - tP) = 1 - t^3, all of which lies outside <4>
        auto P = zmat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
        std::vector<int> dropped;
        auto x = tr::trc0(Z, P, S4, false, &dropped);
        CHECK(witt::witt_eq(Z, x, witt::witt_zero(Z, S4)));
        CHECK(dropped == std::vector<int>{3});
        // ghost still records the power traces visible inside <4>... at m
        // divisible by 3 nothing remains, by design of the quotient
        std::vector<int> dropped12;
        auto y = tr::trc0(Z, P, witt::divisor_trunc(12), false, &dropped12);
        CHECK(dropped12.empty());
        auto w = witt::ghost(Z, y);
        for (int i = 0; i < y.S.size(); ++i)
            CHECK(w[i] == tr::mat_trace(Z, tr::mat_pow(Z, P, y.S.elems[i])));
    }
}

TEST_CASE("a single n-cycle has characteristic series 1 - t^n") {
    for (int n : {1, 2, 3, 4, 6}) {
        tr::Mat<ZRing> P(Z, n);
        for (int i = 0; i < n; ++i) P.at((i + 1) % n, i) = Int(1);
        auto f = tr::char_series(Z, P, 6);
        for (int e = 0; e <= 6; ++e)
            CHECK(f.c[e] == (e == 0 ? Int(1) : e == n ? Int(-1) : Int(0)));
    }
}

TEST_CASE("block permutation matrices add up cycle by cycle") {
    auto S12 = witt::divisor_trunc(12);
    auto cyc = [&](int n) {
        tr::Mat<ZRing> P(Z, n);
        for (int i = 0; i < n; ++i) P.at((i + 1) % n, i) = Int(1);
        return P;
    };
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {1, 4}, {3, 3}, {2, 6}}) {
        auto lhs = tr::trc0(Z, tr::block_sum(Z, cyc(a), cyc(b)), S12);
        auto rhs = witt::witt_add(Z, tr::trc0(Z, cyc(a), S12), tr::trc0(Z, cyc(b), S12));
        CHECK(witt::witt_eq(Z, lhs, rhs));
    }
}

TEST_CASE("matrix inverse over Z and Z/5") {
    Rng rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng.below(3));
        auto A = tr::random_invertible(Z, rng, n, -2, 2);
        auto inv = tr::mat_inverse(Z, A);
        auto prod = tr::mat_mul(Z, A, inv);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(prod.at(i, j) == (i == j ? 1 : 0));
    }
    ZmodRing Z5(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng.below(3));
        auto A = tr::random_invertible(Z5, rng, n, 0, 4);
        auto prod = tr::mat_mul(Z5, A, tr::mat_inverse(Z5, A));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(prod.at(i, j) == (i == j ? 1u : 0u));
    }
}

TEST_CASE("the randomized law suite passes on small runs") {
    tr::TraceSuiteConfig cfg;
    cfg.trials = 40;
    cfg.seed = 7;
    auto rep = tr::trace_property_suite(Z, cfg);
    CHECK(rep.all_pass());
    CHECK(rep.trials == 40);

    ZmodRing Z5(5);
    tr::TraceSuiteConfig cfg5;
    cfg5.lo = 0;
    cfg5.hi = 4;
    cfg5.trials = 40;
    cfg5.seed = 8;
    CHECK(tr::trace_property_suite(Z5, cfg5).all_pass());
}

TEST_CASE("a stubbed multiplication fails law (b) with a witness") {
    tr::TraceSuiteConfig cfg;
    cfg.trials = 25;
    cfg.seed = 9;
    auto rep = tr::trace_property_suite<ZRing>(
        Z, cfg, [](const ZRing&, const witt::WittVec<ZRing>& x, const witt::WittVec<ZRing>&) {
            return x;  // wrong on purpose
        });
    CHECK_FALSE(rep.kronecker_mul);
    CHECK(rep.block_sum_add);
    CHECK_FALSE(rep.witnesses.empty());
}

TEST_CASE("empty configuration is an empty pass") {
    tr::TraceSuiteConfig cfg;
    cfg.trials = 0;
    auto rep = tr::trace_property_suite(Z, cfg);
    CHECK(rep.all_pass());
    CHECK(rep.trials == 0);
}
