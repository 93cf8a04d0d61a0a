#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "rings.hpp"

namespace cyctrace::series {

/// Truncated power series over a ring: c[i] holds the coefficient of t^i,
/// all arithmetic is exact modulo t^{precision+1} where precision = c.size()-1.
template <class R>
struct Series {
    std::vector<typename R::Elem> c;

    int precision() const { return static_cast<int>(c.size()) - 1; }
};

template <class R>
Series<R> series_zero(const R& ring, int prec) {
    Series<R> f;
    f.c.assign(prec + 1, ring.zero());
    return f;
}

template <class R>
Series<R> series_one(const R& ring, int prec) {
    auto f = series_zero(ring, prec);
    f.c[0] = ring.one();
    return f;
}

template <class R>
bool series_eq(const R& ring, const Series<R>& f, const Series<R>& g) {
    if (f.c.size() != g.c.size()) return false;
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (!ring.equal(f.c[i], g.c[i])) return false;
    return true;
}

template <class R>
Series<R> series_mul(const R& ring, const Series<R>& f, const Series<R>& g) {
    int prec = std::min(f.precision(), g.precision());
    auto h = series_zero(ring, prec);
    for (int i = 0; i <= prec; ++i) {
        if (ring.is_zero(f.c[i])) continue;
        for (int j = 0; i + j <= prec; ++j)
            h.c[i + j] = ring.add(h.c[i + j], ring.mul(f.c[i], g.c[j]));
    }
    return h;
}

/// Inverse of a series with constant term 1; needs no ring division.
template <class R>
Series<R> series_inverse(const R& ring, const Series<R>& f) {
    assert(ring.equal(f.c[0], ring.one()));
    int prec = f.precision();
    auto g = series_zero(ring, prec);
    g.c[0] = ring.one();
    for (int n = 1; n <= prec; ++n) {
        auto s = ring.zero();
        for (int j = 1; j <= n; ++j) s = ring.add(s, ring.mul(f.c[j], g.c[n - j]));
        g.c[n] = ring.neg(s);
    }
    return g;
}

/// (1 - a t^n)^e, truncated; e >= 0.
template <class R>
Series<R> series_binomial_factor(const R& ring, const typename R::Elem& a, int n, long long e, int prec) {
    auto acc = series_one(ring, prec);
    if (n > prec) return acc;
    auto base = series_one(ring, prec);
    base.c[n] = ring.neg(a);
    for (long long i = 0; i < e; ++i) acc = series_mul(ring, acc, base);
    return acc;
}

template <class R>
std::string series_str(const R& ring, const Series<R>& f) {
    std::string out;
    bool first = true;
    for (int i = 0; i <= f.precision(); ++i) {
        if (ring.is_zero(f.c[i]) && !(i == 0 && f.precision() == 0)) continue;
        if (ring.is_zero(f.c[i])) continue;
        if (!first) out += " + ";
        out += ring.str(f.c[i]);
        if (i > 0) out += "*t^" + std::to_string(i);
        first = false;
    }
    if (first) out = "0";
    return out + " (mod t^" + std::to_string(f.precision() + 1) + ")";
}

}  // namespace cyctrace::series
