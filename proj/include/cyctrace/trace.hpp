#pragma once

#include <functional>
#include <string>
#include <vector>

#include "witt.hpp"

namespace cyctrace::tr {

using series::Series;
using witt::TruncationSet;
using witt::WittVec;

template <class R>
struct Mat {
    int n = 0;
    std::vector<typename R::Elem> e;

    Mat() = default;
    Mat(const R& ring, int size) : n(size), e(static_cast<std::size_t>(size) * size, ring.zero()) {}
    typename R::Elem& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const typename R::Elem& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

template <class R>
Mat<R> mat_identity(const R& ring, int n) {
    Mat<R> I(ring, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = ring.one();
    return I;
}

template <class R>
Mat<R> mat_mul(const R& ring, const Mat<R>& A, const Mat<R>& B) {
    Mat<R> C(ring, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            if (ring.is_zero(A.at(i, k))) continue;
            for (int j = 0; j < A.n; ++j)
                C.at(i, j) = ring.add(C.at(i, j), ring.mul(A.at(i, k), B.at(k, j)));
        }
    return C;
}

/// Repeated multiplication; exact over any commutative ring.
template <class R>
Mat<R> mat_pow(const R& ring, const Mat<R>& A, int e) {
    Mat<R> P = mat_identity(ring, A.n);
    for (int i = 0; i < e; ++i) P = mat_mul(ring, P, A);
    return P;
}

template <class R>
typename R::Elem mat_trace(const R& ring, const Mat<R>& A) {
    auto s = ring.zero();
    for (int i = 0; i < A.n; ++i) s = ring.add(s, A.at(i, i));
    return s;
}

template <class R>
Mat<R> block_sum(const R& ring, const Mat<R>& A, const Mat<R>& B) {
    Mat<R> C(ring, A.n + B.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) C.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) C.at(A.n + i, A.n + j) = B.at(i, j);
    return C;
}

template <class R>
Mat<R> kronecker(const R& ring, const Mat<R>& A, const Mat<R>& B) {
    Mat<R> C(ring, A.n * B.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            for (int p = 0; p < B.n; ++p)
                for (int q = 0; q < B.n; ++q)
                    C.at(i * B.n + p, j * B.n + q) = ring.mul(A.at(i, j), B.at(p, q));
    return C;
}

/// Berkowitz: division-free characteristic polynomial det(lambda I - A).
/// Returned as v with v[i] = coefficient of lambda^{n-i}, v[0] = 1.
template <class R>
std::vector<typename R::Elem> berkowitz_charpoly(const R& ring, const Mat<R>& A) {
    std::vector<typename R::Elem> p = {ring.one()};
    for (int r = 1; r <= A.n; ++r) {
        // Toeplitz column: 1, -a_rr, -(row M^j col) for j = 0,1,...
        std::vector<typename R::Elem> col;
        col.push_back(ring.one());
        col.push_back(ring.neg(A.at(r - 1, r - 1)));
        std::vector<typename R::Elem> v(r - 1);
        for (int i = 0; i < r - 1; ++i) v[i] = A.at(i, r - 1);
        for (int j = 0; j <= r - 2; ++j) {
            auto s = ring.zero();
            for (int i = 0; i < r - 1; ++i) s = ring.add(s, ring.mul(A.at(r - 1, i), v[i]));
            col.push_back(ring.neg(s));
            if (j < r - 2) {
                std::vector<typename R::Elem> w(r - 1, ring.zero());
                for (int i = 0; i < r - 1; ++i)
                    for (int k = 0; k < r - 1; ++k)
                        w[i] = ring.add(w[i], ring.mul(A.at(i, k), v[k]));
                v = std::move(w);
            }
        }
        std::vector<typename R::Elem> q(r + 1, ring.zero());
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r; ++j)
                if (i - j >= 0 && i - j < static_cast<int>(col.size()))
                    q[i] = ring.add(q[i], ring.mul(col[i - j], p[j]));
        p = std::move(q);
    }
    return p;
}

template <class R>
typename R::Elem det_of(const R& ring, const Mat<R>& A) {
    auto p = berkowitz_charpoly(ring, A);
    auto d = p[A.n];  // det(-A)
    return (A.n % 2) ? ring.neg(d) : d;
}

/// det(I - tA) truncated at t^N: with p the charpoly coefficients above,
/// det(I - tA) = sum_i p[i] t^i.
template <class R>
Series<R> char_series(const R& ring, const Mat<R>& A, int N) {
    auto p = berkowitz_charpoly(ring, A);
    auto f = series::series_zero(ring, N);
    for (int i = 0; i <= N && i <= A.n; ++i) f.c[i] = p[i];
    return f;
}

/// The characteristic trace into truncated Witt vectors: the S-coordinates
/// of the full factorization of det(1 - t alpha), i.e. the image under the
/// quotient W -> W_S.  Exponents whose factor was divided out are returned
/// through `dropped` so callers can report them rather than silently
/// truncate.  Ghost components are the power traces tr(alpha^m).
template <class R>
WittVec<R> trc0(const R& ring, const Mat<R>& A, const TruncationSet& S,
                bool allow_noninvertible = false, std::vector<int>* dropped = nullptr) {
    if (!allow_noninvertible && !ring.is_unit(det_of(ring, A)))
        throw std::invalid_argument("trc0: matrix is not an automorphism (det not a unit)");
    return witt::from_series(ring, char_series(ring, A, S.max()), S,
                             witt::SeriesPolicy::Quotient, dropped);
}

/// Adjugate-based inverse for matrices with unit determinant.
template <class R>
Mat<R> mat_inverse(const R& ring, const Mat<R>& A) {
    auto d = det_of(ring, A);
    auto dinv = ring.inv_unit(d);
    Mat<R> inv(ring, A.n);
    if (A.n == 1) {
        inv.at(0, 0) = dinv;
        return inv;
    }
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            Mat<R> minor(ring, A.n - 1);
            for (int r = 0, rr = 0; r < A.n; ++r) {
                if (r == j) continue;
                for (int c = 0, cc = 0; c < A.n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = A.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            auto cof = det_of(ring, minor);
            if ((i + j) % 2) cof = ring.neg(cof);
            inv.at(i, j) = ring.mul(cof, dinv);
        }
    return inv;
}

template <class R>
Mat<R> random_matrix(const R& ring, Rng& rng, int n, long long lo, long long hi) {
    Mat<R> A(ring, n);
    for (auto& v : A.e) v = ring.from_int(rng.range(lo, hi));
    return A;
}

/// Random matrix with unit determinant, entries in [lo,hi]; rejection with a
/// signed-permutation fallback so the suite never stalls.
template <class R>
Mat<R> random_invertible(const R& ring, Rng& rng, int n, long long lo, long long hi) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        auto A = random_matrix(ring, rng, n, lo, hi);
        if (ring.is_unit(det_of(ring, A))) return A;
    }
    Mat<R> P(ring, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    for (int i = 0; i < n; ++i)
        P.at(i, perm[i]) = (rng.below(2) ? ring.one() : ring.neg(ring.one()));
    return P;
}

// ---------------------------------------------------------------------------
// the randomized law suite
// ---------------------------------------------------------------------------

struct TraceSuiteConfig {
    int max_size = 3;
    long long lo = -2, hi = 2;
    int max_r = 4;
    int trials = 200;
    std::uint64_t seed = 1;
    TruncationSet S = witt::divisor_trunc(12);
};

struct TraceLawReport {
    bool block_sum_add = true;     // (a)
    bool kronecker_mul = true;     // (b)
    bool frobenius_power = true;   // (c)
    bool similarity = true;        // (d)
    bool ghost_power_sums = true;  // (e)
    int trials = 0;
    std::vector<std::string> witnesses;

    bool all_pass() const {
        return block_sum_add && kronecker_mul && frobenius_power && similarity && ghost_power_sums;
    }
};

/// Verify the homomorphism laws of the characteristic trace on randomized
/// invertible matrices.  Each side of each law is computed independently
/// (fresh determinants for the transformed matrices).  `mul_hook`, when set,
/// replaces witt_mul in law (b); the negative-control tests use it.
template <class R>
TraceLawReport trace_property_suite(
    const R& ring, const TraceSuiteConfig& cfg,
    std::function<WittVec<R>(const R&, const WittVec<R>&, const WittVec<R>&)> mul_hook = nullptr) {
    TraceLawReport rep;
    Rng master(cfg.seed);
    auto fail = [&](TraceLawReport& r, bool TraceLawReport::* law, int trial, const std::string& msg) {
        r.*law = false;
        if (r.witnesses.size() < 8)
            r.witnesses.push_back("trial " + std::to_string(trial) + ": " + msg);
    };
    for (int trial = 0; trial < cfg.trials; ++trial) {
        Rng rng = master.fork(trial);
        ++rep.trials;
        const int na = static_cast<int>(rng.range(1, cfg.max_size));
        const int nb = static_cast<int>(rng.range(1, cfg.max_size));
        auto A = random_invertible(ring, rng, na, cfg.lo, cfg.hi);
        auto B = random_invertible(ring, rng, nb, cfg.lo, cfg.hi);
        auto tA = trc0(ring, A, cfg.S);
        auto tB = trc0(ring, B, cfg.S);

        // (a) block sum |-> witt_add
        auto lhs_a = trc0(ring, block_sum(ring, A, B), cfg.S);
        if (!witt::witt_eq(ring, lhs_a, witt::witt_add(ring, tA, tB)))
            fail(rep, &TraceLawReport::block_sum_add, trial, "block-sum law");

        // (b) Kronecker product |-> witt_mul
        auto prod = mul_hook ? mul_hook(ring, tA, tB) : witt::witt_mul(ring, tA, tB);
        auto lhs_b = trc0(ring, kronecker(ring, A, B), cfg.S);
        if (!witt::witt_eq(ring, lhs_b, prod))
            fail(rep, &TraceLawReport::kronecker_mul, trial,
                 "kronecker law: trc0 = " + witt::witt_str(ring, lhs_b) + " vs product " +
                     witt::witt_str(ring, prod));

        // (c) frobenius_witt . trc0 = trc0 . (alpha -> alpha^r)
        for (int r = 1; r <= cfg.max_r; ++r) {
            auto lhs_c = witt::frobenius_witt(ring, tA, r);
            auto rhs_c = trc0(ring, mat_pow(ring, A, r), lhs_c.S);
            if (!witt::witt_eq(ring, lhs_c, rhs_c))
                fail(rep, &TraceLawReport::frobenius_power, trial,
                     "frobenius law at r=" + std::to_string(r));
        }

        // (d) similarity invariance
        auto G = random_invertible(ring, rng, na, cfg.lo, cfg.hi);
        auto conj = mat_mul(ring, mat_mul(ring, G, A), mat_inverse(ring, G));
        if (!witt::witt_eq(ring, trc0(ring, conj, cfg.S), tA))
            fail(rep, &TraceLawReport::similarity, trial, "similarity invariance");

        // (e) ghost coordinates are the power traces
        auto w = witt::ghost(ring, tA);
        for (int i = 0; i < cfg.S.size(); ++i) {
            auto tm = mat_trace(ring, mat_pow(ring, A, cfg.S.elems[i]));
            if (!ring.equal(w[i], tm))
                fail(rep, &TraceLawReport::ghost_power_sums, trial,
                     "ghost != trace at m=" + std::to_string(cfg.S.elems[i]));
        }
    }
    return rep;
}

}  // namespace cyctrace::tr
