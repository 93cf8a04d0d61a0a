#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "util.hpp"

namespace cyctrace::rings {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// The arbitrary-precision integers.
struct ZRing {
    using Elem = Int;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem inv_unit(const Elem& a) const {
        if (!is_unit(a)) throw std::invalid_argument("ZRing: not a unit");
        return a;
    }
    std::string str(const Elem& a) const { return a.str(); }
    std::string tag() const { return "z:0"; }
    Elem parse(const std::string& s) const { return Elem(s); }
};

/// The integers modulo m, m >= 2.  Elements are stored reduced to [0, m).
struct ZmodRing {
    using Elem = std::uint64_t;
    std::uint64_t m;

    explicit ZmodRing(std::uint64_t modulus) : m(modulus) {
        if (m < 2) throw SchemaError("zmod modulus must be >= 2");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % m; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % m; }
    Elem sub(Elem a, Elem b) const { return (a + m - b) % m; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % m);
    }
    Elem neg(Elem a) const { return (m - a) % m; }
    bool equal(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_unit(Elem a) const { return gcd_ll(static_cast<long long>(a), static_cast<long long>(m)) == 1; }
    Elem inv_unit(Elem a) const {
        long long t = 0, newt = 1, r = static_cast<long long>(m), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw std::invalid_argument("ZmodRing: not a unit");
        return from_int(t);
    }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string tag() const { return "z:" + std::to_string(m); }
    Elem parse(const std::string& s) const { return from_int(std::stoll(s)); }
};

/// The rationals, exactly.
struct QRing {
    using Elem = Rat;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_unit(const Elem& a) const { return a != 0; }
    Elem inv_unit(const Elem& a) const {
        if (a == 0) throw std::invalid_argument("QRing: not a unit");
        return Elem(1) / a;
    }
    std::string str(const Elem& a) const { return a.str(); }
    std::string tag() const { return "q"; }
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Elem(Int(s));
        return Elem(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
};

template <class R>
typename R::Elem pow_elem(const R& ring, typename R::Elem base, long long e) {
    auto acc = ring.one();
    for (long long i = 0; i < e; ++i) acc = ring.mul(acc, base);
    return acc;
}

}  // namespace cyctrace::rings
