#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "series.hpp"
#include "util.hpp"

namespace cyctrace::witt {

using series::Series;

/// A finite divisor-closed set of positive integers, kept sorted.
struct TruncationSet {
    std::vector<int> elems;

    int max() const { return elems.empty() ? 0 : elems.back(); }
    int size() const { return static_cast<int>(elems.size()); }
    bool contains(int n) const {
        return std::binary_search(elems.begin(), elems.end(), n);
    }
    int position(int n) const {
        auto it = std::lower_bound(elems.begin(), elems.end(), n);
        return (it != elems.end() && *it == n) ? static_cast<int>(it - elems.begin()) : -1;
    }
    bool operator==(const TruncationSet& o) const { return elems == o.elems; }

    std::string str() const {
        std::string s = "{";
        for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(elems[i]);
        return s + "}";
    }
};

inline bool is_divisor_closed(const std::vector<int>& v) {
    for (int n : v) {
        if (n < 1) return false;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0 && !std::binary_search(v.begin(), v.end(), d)) return false;
    }
    return true;
}

inline TruncationSet make_trunc(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!is_divisor_closed(v)) throw SchemaError("truncation set is not divisor-closed");
    return {std::move(v)};
}

/// <n>: the divisors of n.
inline TruncationSet divisor_trunc(int n) { return {divisors_of(n)}; }

/// S/r = {n : rn in S}.
inline TruncationSet quotient_trunc(const TruncationSet& S, int r) {
    TruncationSet T;
    for (int n : S.elems)
        if (n % r == 0) T.elems.push_back(n / r);
    // divisor-closedness is inherited from S
    return T;
}

/// Coordinate vector indexed by a truncation set; the series dictionary is
/// x  <->  prod_{n in S} (1 - a_n t^n)  mod t^{max(S)+1}.
template <class R>
struct WittVec {
    TruncationSet S;
    std::vector<typename R::Elem> a;

    const typename R::Elem& coord(int n) const { return a[S.position(n)]; }
};

template <class R>
WittVec<R> witt_zero(const R& ring, const TruncationSet& S) {
    WittVec<R> x{S, {}};
    x.a.assign(S.elems.size(), ring.zero());
    return x;
}

/// (a, 0, 0, ...): the multiplicative lift, series 1 - a t.
template <class R>
WittVec<R> teichmuller(const R& ring, const TruncationSet& S, const typename R::Elem& v) {
    auto x = witt_zero(ring, S);
    int p = S.position(1);
    if (p < 0) throw SchemaError("teichmuller: truncation set lacks 1");
    x.a[p] = v;
    return x;
}

template <class R>
bool witt_eq(const R& ring, const WittVec<R>& x, const WittVec<R>& y) {
    if (!(x.S == y.S)) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!ring.equal(x.a[i], y.a[i])) return false;
    return true;
}

template <class R>
std::string witt_str(const R& ring, const WittVec<R>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.a.size(); ++i) s += (i ? "," : "") + ring.str(x.a[i]);
    return s + ") over " + x.S.str();
}

template <class R>
Series<R> to_series(const R& ring, const WittVec<R>& x) {
    const int prec = x.S.max();
    auto f = series::series_one(ring, prec);
    for (int i = 0; i < x.S.size(); ++i)
        if (!ring.is_zero(x.a[i]))
            f = series_mul(ring, f, series::series_binomial_factor(ring, x.a[i], x.S.elems[i], 1, prec));
    return f;
}

/// How from_series treats factors landing at exponents outside S:
///   Strict   — raise a SpanError naming the exponent; the documented
///              contract of the standalone operation.
///   Quotient — divide them out and record them, which is the Witt-ring
///              quotient W -> W_S and what the ring operations and the trace
///              require (a product of two S-supported series need not be
///              S-supported below max(S); the classical coordinate formulas
///              depend only on divisor coordinates, so dropping is exact).
enum class SeriesPolicy { Strict, Quotient };

/// Coordinates of a series with constant term 1, extracted by increasing-n
/// recursion: at each exponent the leading coefficient of the residual is
/// (minus) the coordinate, and the factor is divided out polynomially.
/// Under Quotient, exponents outside S whose factor was nonzero are appended
/// to `dropped` when given, so callers report rather than silently truncate.
template <class R>
WittVec<R> from_series(const R& ring, const Series<R>& f, const TruncationSet& S,
                       SeriesPolicy policy = SeriesPolicy::Strict,
                       std::vector<int>* dropped = nullptr) {
    const int prec = S.max();
    Series<R> g = series::series_zero(ring, prec);
    for (int i = 0; i <= prec && i <= f.precision(); ++i) g.c[i] = f.c[i];
    if (!ring.equal(g.c[0], ring.one()))
        throw std::invalid_argument("from_series: constant term must be 1");
    auto x = witt_zero(ring, S);
    for (int n = 1; n <= prec; ++n) {
        auto c = ring.neg(g.c[n]);  // candidate coordinate at exponent n
        int pos = S.position(n);
        if (pos >= 0) {
            x.a[pos] = c;
        } else if (!ring.is_zero(c)) {
            if (policy == SeriesPolicy::Strict)
                throw SpanError(n, "series does not factor over " + S.str() +
                                       ": residual coefficient " + ring.str(g.c[n]) +
                                       " at exponent " + std::to_string(n));
            if (dropped) dropped->push_back(n);
        }
        if (ring.is_zero(c)) continue;
        // divide by (1 - c t^n): multiply by its geometric inverse
        auto inv = series::series_one(ring, prec);
        auto p = ring.one();
        for (int j = n; j <= prec; j += n) {
            p = ring.mul(p, c);
            inv.c[j] = p;
        }
        g = series_mul(ring, g, inv);
    }
    return x;
}

/// Addition is series multiplication under the dictionary.
template <class R>
WittVec<R> witt_add(const R& ring, const WittVec<R>& x, const WittVec<R>& y) {
    if (!(x.S == y.S)) throw std::invalid_argument("witt_add: truncation sets differ");
    return from_series(ring, series_mul(ring, to_series(ring, x), to_series(ring, y)), x.S,
                       SeriesPolicy::Quotient);
}

template <class R>
WittVec<R> witt_neg(const R& ring, const WittVec<R>& x) {
    return from_series(ring, series_inverse(ring, to_series(ring, x)), x.S,
                       SeriesPolicy::Quotient);
}

template <class R>
WittVec<R> witt_sub(const R& ring, const WittVec<R>& x, const WittVec<R>& y) {
    return witt_add(ring, x, witt_neg(ring, y));
}

/// Multiplication: bilinear extension of
///   (1 - a t^m) * (1 - b t^n) = (1 - a^{n/d} b^{m/d} t^{lcm(m,n)})^d,
/// d = gcd(m,n); summed by multiplying out the factor series.
template <class R>
WittVec<R> witt_mul(const R& ring, const WittVec<R>& x, const WittVec<R>& y) {
    if (!(x.S == y.S)) throw std::invalid_argument("witt_mul: truncation sets differ");
    const int prec = x.S.max();
    auto acc = series::series_one(ring, prec);
    for (int i = 0; i < x.S.size(); ++i) {
        if (ring.is_zero(x.a[i])) continue;
        const int m = x.S.elems[i];
        for (int j = 0; j < y.S.size(); ++j) {
            if (ring.is_zero(y.a[j])) continue;
            const int n = y.S.elems[j];
            const long long d = gcd_ll(m, n), l = lcm_ll(m, n);
            if (l > prec) continue;
            auto c = ring.mul(rings::pow_elem(ring, x.a[i], n / d),
                              rings::pow_elem(ring, y.a[j], m / d));
            acc = series_mul(ring, acc,
                             series::series_binomial_factor(ring, c, static_cast<int>(l), d, prec));
        }
    }
    return from_series(ring, acc, x.S, SeriesPolicy::Quotient);
}

/// Ghost coordinates w_m = sum_{d | m} d * a_d^{m/d}; a ring homomorphism
/// into the product ring.
template <class R>
std::vector<typename R::Elem> ghost(const R& ring, const WittVec<R>& x) {
    std::vector<typename R::Elem> w;
    for (int m : x.S.elems) {
        auto s = ring.zero();
        for (int i = 0; i < x.S.size(); ++i) {
            const int d = x.S.elems[i];
            if (d > m) break;
            if (m % d) continue;
            s = ring.add(s, ring.mul(ring.from_int(d), rings::pow_elem(ring, x.a[i], m / d)));
        }
        w.push_back(s);
    }
    return w;
}

/// Frobenius F_r : W_S -> W_{S/r}, the additive extension of
///   F_r(1 - a t^n) = (1 - a^{r/d} t^{n/d})^d, d = gcd(r,n).
/// Ghost-level: ghost(F_r x)_n = ghost(x)_{rn}.
template <class R>
WittVec<R> frobenius_witt(const R& ring, const WittVec<R>& x, int r) {
    if (r < 1) throw std::invalid_argument("frobenius_witt: r must be >= 1");
    TruncationSet T = quotient_trunc(x.S, r);
    if (T.elems.empty()) return WittVec<R>{T, {}};  // the zero ring
    const int prec = T.max();
    auto acc = series::series_one(ring, prec);
    for (int i = 0; i < x.S.size(); ++i) {
        if (ring.is_zero(x.a[i])) continue;
        const int n = x.S.elems[i];
        const long long d = gcd_ll(r, n);
        const int nd = n / static_cast<int>(d);
        if (nd > prec) continue;
        auto c = rings::pow_elem(ring, x.a[i], r / d);
        acc = series_mul(ring, acc, series::series_binomial_factor(ring, c, nd, d, prec));
    }
    return from_series(ring, acc, T, SeriesPolicy::Quotient);
}

/// Verschiebung V_r : W_{S/r} -> W_S, the substitution t -> t^r; on
/// coordinates a pure index shift.
template <class R>
WittVec<R> verschiebung_witt(const R& ring, const WittVec<R>& x, int r, const TruncationSet& S) {
    if (r < 1) throw std::invalid_argument("verschiebung_witt: r must be >= 1");
    for (int n : x.S.elems)
        if (!S.contains(n * r))
            throw std::invalid_argument("verschiebung_witt: target set does not contain r*S");
    auto y = witt_zero(ring, S);
    for (int i = 0; i < S.size(); ++i) {
        const int m = S.elems[i];
        if (m % r) continue;
        int p = x.S.position(m / r);
        if (p >= 0) y.a[i] = x.a[p];
    }
    return y;
}

/// Restriction: coordinate projection onto a divisor-closed subset.
template <class R>
WittVec<R> restrict_witt(const R& ring, const WittVec<R>& x, const TruncationSet& T) {
    for (int n : T.elems)
        if (!x.S.contains(n)) throw std::invalid_argument("restrict_witt: T not a subset of S");
    if (!is_divisor_closed(T.elems)) throw SchemaError("restrict_witt: T not divisor-closed");
    WittVec<R> y{T, {}};
    for (int n : T.elems) y.a.push_back(x.coord(n));
    (void)ring;
    return y;
}

template <class R>
WittVec<R> random_witt(const R& ring, const TruncationSet& S, Rng& rng, long long lo = -9,
                       long long hi = 9) {
    auto x = witt_zero(ring, S);
    for (auto& c : x.a) c = ring.from_int(rng.range(lo, hi));
    return x;
}

}  // namespace cyctrace::witt
