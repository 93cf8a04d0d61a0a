#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "report.hpp"
#include "util.hpp"

namespace cyctrace::cube {

/// One formal summand of a coherence homotopy: the face-parameter monomial
/// (t_p for p in `upper`, (1-t_p) for the other ambient primes) attached to
/// the operator word Dbar_{dbar} . D_{d}.  Lower symbols always precede
/// upper ones in a word, so a pair of products is a complete normal form.
struct CubeTerm {
    std::set<int> upper;       // primes carrying a t_p factor
    long long d = 1;           // product of D-subscripts
    long long dbar = 1;        // product of Dbar-subscripts

    bool operator<(const CubeTerm& o) const {
        if (upper != o.upper) return upper < o.upper;
        if (d != o.d) return d < o.d;
        return dbar < o.dbar;
    }
    bool operator==(const CubeTerm& o) const {
        return upper == o.upper && d == o.d && dbar == o.dbar;
    }
};

/// A formal sum of cube terms over an ambient prime set.
struct CubeExpr {
    std::set<int> ambient;
    std::vector<CubeTerm> terms;

    void normalize() { std::sort(terms.begin(), terms.end()); }
    bool operator==(const CubeExpr& o) const {
        return ambient == o.ambient && terms == o.terms;
    }
};

inline long long prod(const std::set<int>& s) {
    long long p = 1;
    for (int x : s) p *= x;
    return p;
}

/// h^U expanded: product over p in U of ((1-t_p) D_p + t_p Dbar_p), with
/// D-symbols applied first in every mixed word.
inline CubeExpr expand_h(const std::set<int>& U) {
    CubeExpr e;
    e.ambient = U;
    std::vector<int> primes(U.begin(), U.end());
    const std::size_t n = primes.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        CubeTerm t;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i))
                t.upper.insert(primes[i]);
        t.dbar = prod(t.upper);
        std::set<int> low(U.begin(), U.end());
        for (int p : t.upper) low.erase(p);
        t.d = prod(low);
        e.terms.push_back(t);
    }
    e.normalize();
    return e;
}

/// Substitute t_p = 0 for p in V: terms containing a t_p factor vanish.
inline CubeExpr lower_face(const CubeExpr& e, const std::set<int>& V) {
    CubeExpr out;
    out.ambient = e.ambient;
    for (int p : V) out.ambient.erase(p);
    for (const auto& t : e.terms) {
        bool dies = false;
        for (int p : V)
            if (t.upper.count(p)) dies = true;
        if (!dies) out.terms.push_back(t);
    }
    out.normalize();
    return out;
}

/// Substitute t_p = 1 for p in V: terms with a (1-t_p) factor vanish.
inline CubeExpr upper_face(const CubeExpr& e, const std::set<int>& V) {
    CubeExpr out;
    out.ambient = e.ambient;
    for (int p : V) out.ambient.erase(p);
    for (auto t : e.terms) {
        bool dies = false;
        for (int p : V)
            if (!t.upper.count(p)) dies = true;
        if (dies) continue;
        for (int p : V) t.upper.erase(p);
        out.terms.push_back(t);
    }
    out.normalize();
    return out;
}

/// Precompose every word with D_V (D-symbols merge: D_a D_b = D_{ab}).
inline CubeExpr precompose_d(const CubeExpr& e, const std::set<int>& V) {
    CubeExpr out = e;
    for (auto& t : out.terms) t.d *= prod(V);
    out.normalize();
    return out;
}

/// Postcompose every word with Dbar_V.
inline CubeExpr postcompose_dbar(const CubeExpr& e, const std::set<int>& V) {
    CubeExpr out = e;
    for (auto& t : out.terms) t.dbar *= prod(V);
    out.normalize();
    return out;
}

inline std::string set_str(const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int p : s) {
        if (!first) out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

inline std::string term_str(const CubeTerm& t, const std::set<int>& ambient) {
    std::string out;
    for (int p : ambient)
        out += t.upper.count(p) ? "t_" + std::to_string(p) + " " : "(1-t_" + std::to_string(p) + ") ";
    if (t.dbar != 1) out += "Dbar_" + std::to_string(t.dbar);
    if (t.d != 1) out += (t.dbar != 1 ? "." : "") + std::string("D_") + std::to_string(t.d);
    if (t.d == 1 && t.dbar == 1) out += "id";
    return out;
}

/// Per-(U,V) verdicts for the two face relations of the coherence homotopies:
///   lower:  restricting t_p = 0 on V equals h^{U-V} precomposed with D_V
///   upper:  restricting t_p = 1 on V equals Dbar_V postcomposed with h^{U-V}
struct CubeFaceReport {
    struct Entry {
        std::set<int> U, V;
        bool lower_ok = false, upper_ok = false;
    };
    std::vector<Entry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.lower_ok || !e.upper_ok) return false;
        return true;
    }
};

inline CubeFaceReport verify_cube_face_relations(const std::set<int>& U) {
    if (U.size() > 6)
        throw std::invalid_argument("verify_cube_face_relations: |U| <= 6 (symbolic expansion)");
    CubeFaceReport rep;
    CubeExpr hU = expand_h(U);
    std::vector<int> primes(U.begin(), U.end());
    const std::size_t n = primes.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::set<int> V;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) V.insert(primes[i]);
        std::set<int> rest(U.begin(), U.end());
        for (int p : V) rest.erase(p);
        CubeExpr hRest = expand_h(rest);
        CubeFaceReport::Entry entry;
        entry.U = U;
        entry.V = V;
        entry.lower_ok = lower_face(hU, V) == precompose_d(hRest, V);
        entry.upper_ok = upper_face(hU, V) == postcompose_dbar(hRest, V);
        rep.entries.push_back(entry);
    }
    return rep;
}

}  // namespace cyctrace::cube
