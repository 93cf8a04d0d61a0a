#pragma once

#include <map>
#include <string>
#include <vector>

#include "report.hpp"
#include "util.hpp"

namespace cyctrace::cat {

/// A finite category: indexed objects and morphisms with a tabulated
/// composition.  comp[g][f] is g after f; -1 marks an undefined composite.
/// Undefined entries are only legitimate for bounded truncations of infinite
/// categories (the multiplicative monoid N, its action on the divisibility
/// category); honest finite categories must be total, and validation treats
/// a missing composite of a composable pair as a violation unless the
/// category is flagged `truncated`.
struct FinCategory {
    struct Mor {
        std::string name;
        int src = 0, dst = 0;
    };

    std::vector<std::string> objects;
    std::vector<Mor> mors;
    std::vector<int> identity;
    std::vector<std::vector<int>> comp;
    bool truncated = false;

    int n_obj() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(mors.size()); }
    bool composable(int g, int f) const { return mors[f].dst == mors[g].src; }
    int compose(int g, int f) const { return comp[g][f]; }

    int find_mor(const std::string& name) const {
        for (int i = 0; i < n_mor(); ++i)
            if (mors[i].name == name) return i;
        return -1;
    }
    std::string mor_str(int f) const {
        return mors[f].name + ":" + objects[mors[f].src] + "->" + objects[mors[f].dst];
    }
};

inline ValidationReport schema_check(const FinCategory& C) {
    ValidationReport rep;
    if (static_cast<int>(C.identity.size()) != C.n_obj()) {
        rep.add("schema: identities", -1, "", "one identity per object required");
        return rep;
    }
    for (int o = 0; o < C.n_obj(); ++o) {
        int e = C.identity[o];
        if (e < 0 || e >= C.n_mor() || C.mors[e].src != o || C.mors[e].dst != o) {
            rep.add("schema: identities", -1, C.objects[o], "identity is not an endomorphism");
            return rep;
        }
    }
    for (const auto& m : C.mors)
        if (m.src < 0 || m.src >= C.n_obj() || m.dst < 0 || m.dst >= C.n_obj()) {
            rep.add("schema: morphisms", -1, m.name, "endpoint out of range");
            return rep;
        }
    if (static_cast<int>(C.comp.size()) != C.n_mor()) {
        rep.add("schema: composition", -1, "", "table size");
        return rep;
    }
    for (int g = 0; g < C.n_mor(); ++g) {
        if (static_cast<int>(C.comp[g].size()) != C.n_mor()) {
            rep.add("schema: composition", -1, C.mors[g].name, "table row size");
            return rep;
        }
        for (int f = 0; f < C.n_mor(); ++f) {
            int h = C.comp[g][f];
            if (h < -1 || h >= C.n_mor()) {
                rep.add("schema: composition", -1, C.mor_str(g) + " . " + C.mor_str(f),
                        "entry out of range");
                return rep;
            }
            if (h >= 0 && !C.composable(g, f)) {
                rep.add("schema: composition", -1, C.mor_str(g) + " . " + C.mor_str(f),
                        "composite of non-composable pair");
                return rep;
            }
            if (h >= 0 && (C.mors[h].src != C.mors[f].src || C.mors[h].dst != C.mors[g].dst)) {
                rep.add("schema: composition", -1, C.mor_str(g) + " . " + C.mor_str(f),
                        "composite has wrong endpoints");
                return rep;
            }
        }
    }
    return rep;
}

/// Associativity and identity laws with witnesses.  For truncated categories
/// the laws are checked wherever every composite involved is defined.
inline ValidationReport validate_category(const FinCategory& C) {
    ValidationReport rep = schema_check(C);
    if (!rep.ok()) return rep;
    for (int f = 0; f < C.n_mor(); ++f) {
        int l = C.compose(C.identity[C.mors[f].dst], f);
        int r = C.compose(f, C.identity[C.mors[f].src]);
        if (l != f)
            rep.add("left identity law", -1, C.mor_str(f),
                    l < 0 ? "id . f undefined" : "id . f = " + C.mors[l].name);
        if (r != f)
            rep.add("right identity law", -1, C.mor_str(f),
                    r < 0 ? "f . id undefined" : "f . id = " + C.mors[r].name);
    }
    for (int h = 0; h < C.n_mor(); ++h)
        for (int g = 0; g < C.n_mor(); ++g) {
            if (!C.composable(h, g)) continue;
            int hg = C.compose(h, g);
            for (int f = 0; f < C.n_mor(); ++f) {
                if (!C.composable(g, f)) continue;
                int gf = C.compose(g, f);
                int left = (hg >= 0 && gf >= 0) ? -2 : -3;  // sentinel
                if (hg >= 0 && gf >= 0) {
                    int a = C.compose(hg, f), b = C.compose(h, gf);
                    if (a < 0 && b < 0) continue;  // outside the truncation
                    if (a != b)
                        rep.add("associativity", -1,
                                "(" + C.mors[h].name + "," + C.mors[g].name + "," + C.mors[f].name + ")",
                                "(h.g).f != h.(g.f)");
                } else if (!C.truncated) {
                    rep.add("associativity", -1,
                            "(" + C.mors[h].name + "," + C.mors[g].name + "," + C.mors[f].name + ")",
                            "composable pair has undefined composite");
                    (void)left;
                }
            }
        }
    return rep;
}

/// Comma category (K down X): objects are the morphisms into X, a morphism
/// (f) -> (f') is g with f'. g = f.  Keeps the dictionary back to K.
struct CommaCategory {
    FinCategory cat;
    std::vector<int> obj_mor;  // comma object -> morphism of K into X
    std::vector<int> mor_of;   // comma morphism -> underlying morphism of K
};

inline CommaCategory comma_over(const FinCategory& K, int X) {
    if (X < 0 || X >= K.n_obj()) throw std::invalid_argument("comma_over: no such object");
    CommaCategory R;
    R.cat.truncated = K.truncated;
    std::vector<int> obj_of_mor(K.n_mor(), -1);
    for (int f = 0; f < K.n_mor(); ++f)
        if (K.mors[f].dst == X) {
            obj_of_mor[f] = static_cast<int>(R.obj_mor.size());
            R.obj_mor.push_back(f);
            R.cat.objects.push_back("[" + K.mors[f].name + "]");
        }
    struct Key {
        int g, from, to;
    };
    std::vector<Key> keys;
    std::map<std::pair<int, std::pair<int, int>>, int> index;
    for (std::size_t a = 0; a < R.obj_mor.size(); ++a)
        for (std::size_t b = 0; b < R.obj_mor.size(); ++b) {
            int f = R.obj_mor[a], f2 = R.obj_mor[b];
            for (int g = 0; g < K.n_mor(); ++g)
                if (K.mors[g].src == K.mors[f].src && K.mors[g].dst == K.mors[f2].src &&
                    K.compose(f2, g) == f) {
                    index[{g, {static_cast<int>(a), static_cast<int>(b)}}] =
                        static_cast<int>(keys.size());
                    keys.push_back({g, static_cast<int>(a), static_cast<int>(b)});
                    R.cat.mors.push_back(
                        {K.mors[g].name + "/" + std::to_string(a) + ">" + std::to_string(b),
                         static_cast<int>(a), static_cast<int>(b)});
                    R.mor_of.push_back(g);
                }
        }
    R.cat.identity.resize(R.obj_mor.size());
    for (std::size_t a = 0; a < R.obj_mor.size(); ++a) {
        int idK = K.identity[K.mors[R.obj_mor[a]].src];
        auto it = index.find({idK, {static_cast<int>(a), static_cast<int>(a)}});
        if (it == index.end()) throw SchemaError("comma_over: identity triangle missing");
        R.cat.identity[a] = it->second;
    }
    const int n = static_cast<int>(keys.size());
    R.cat.comp.assign(n, std::vector<int>(n, -1));
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            if (keys[p].to != keys[q].from) continue;
            int u = K.compose(keys[q].g, keys[p].g);
            if (u < 0) continue;
            auto it = index.find({u, {keys[p].from, keys[q].to}});
            if (it != index.end()) R.cat.comp[q][p] = it->second;
        }
    return R;
}

/// A (possibly partial) functor between tabulated categories; -1 entries mean
/// "outside the truncation bound".
struct Functor {
    std::vector<int> ob;
    std::vector<int> mor;

    bool total() const {
        for (int v : ob)
            if (v < 0) return false;
        for (int v : mor)
            if (v < 0) return false;
        return true;
    }
};

inline ValidationReport check_functor(const FinCategory& A, const FinCategory& B, const Functor& F,
                                      bool allow_partial = false) {
    ValidationReport rep;
    if (static_cast<int>(F.ob.size()) != A.n_obj() || static_cast<int>(F.mor.size()) != A.n_mor()) {
        rep.add("schema: functor", -1, "", "map sizes");
        return rep;
    }
    if (!allow_partial && !F.total()) {
        rep.add("functor totality", -1, "", "undefined image");
        return rep;
    }
    for (int f = 0; f < A.n_mor(); ++f) {
        if (F.mor[f] < 0) continue;
        const auto& m = A.mors[f];
        if (F.ob[m.src] < 0 || F.ob[m.dst] < 0 ||
            B.mors[F.mor[f]].src != F.ob[m.src] || B.mors[F.mor[f]].dst != F.ob[m.dst])
            rep.add("functor respects endpoints", -1, A.mor_str(f));
    }
    for (int o = 0; o < A.n_obj(); ++o)
        if (F.ob[o] >= 0 && F.mor[A.identity[o]] != B.identity[F.ob[o]])
            rep.add("functor preserves identities", -1, A.objects[o]);
    for (int g = 0; g < A.n_mor(); ++g)
        for (int f = 0; f < A.n_mor(); ++f) {
            if (!A.composable(g, f)) continue;
            int gf = A.compose(g, f);
            if (gf < 0) continue;
            if (F.mor[g] < 0 || F.mor[f] < 0 || F.mor[gf] < 0) continue;
            int im = B.compose(F.mor[g], F.mor[f]);
            if (im != F.mor[gf])
                rep.add("functor preserves composition", -1,
                        "(" + A.mors[g].name + "," + A.mors[f].name + ")");
        }
    return rep;
}

/// Verdict on whether F is an isomorphism of categories.  For partial F the
/// defined part must be injective and cover all of B (the bounded reading
/// used for truncations of infinite instances); `total_iso` additionally
/// requires totality.
struct IsoVerdict {
    bool functor_laws = false;
    bool injective = false;
    bool surjective = false;
    bool total = false;
    std::string witness;

    bool total_iso() const { return functor_laws && injective && surjective && total; }
    bool bounded_iso() const { return functor_laws && injective && surjective; }
};

inline IsoVerdict check_iso(const FinCategory& A, const FinCategory& B, const Functor& F) {
    IsoVerdict v;
    auto rep = check_functor(A, B, F, true);
    v.functor_laws = rep.ok();
    if (!v.functor_laws && !rep.violations.empty()) v.witness = rep.violations.front().str();
    v.total = F.total();
    v.injective = true;
    std::vector<int> ob_hit(B.n_obj(), 0), mor_hit(B.n_mor(), 0);
    for (int o = 0; o < A.n_obj(); ++o)
        if (F.ob[o] >= 0) {
            if (ob_hit[F.ob[o]]++) {
                v.injective = false;
                if (v.witness.empty()) v.witness = "objects collapse onto " + B.objects[F.ob[o]];
            }
        }
    for (int f = 0; f < A.n_mor(); ++f)
        if (F.mor[f] >= 0) {
            if (mor_hit[F.mor[f]]++) {
                v.injective = false;
                if (v.witness.empty()) v.witness = "morphisms collapse onto " + B.mors[F.mor[f]].name;
            }
        }
    v.surjective = true;
    for (int o = 0; o < B.n_obj(); ++o)
        if (!ob_hit[o]) {
            v.surjective = false;
            if (v.witness.empty()) v.witness = "object " + B.objects[o] + " not hit";
        }
    for (int f = 0; f < B.n_mor(); ++f)
        if (!mor_hit[f]) {
            v.surjective = false;
            if (v.witness.empty()) v.witness = "morphism " + B.mors[f].name + " not hit";
        }
    return v;
}

/// Product category with projections kept implicit via pair indexing.
struct ProductCategory {
    FinCategory cat;
    int ob_a = 0, mor_a = 0;  // strides: pair (x,y) -> x*stride_b + y

    int ob_pair(int x, int y, int nb) const { return x * nb + y; }
};

inline FinCategory product_category(const FinCategory& A, const FinCategory& B) {
    FinCategory P;
    P.truncated = A.truncated || B.truncated;
    for (const auto& oa : A.objects)
        for (const auto& ob : B.objects) P.objects.push_back("(" + oa + "," + ob + ")");
    const int nb = B.n_obj(), mb = B.n_mor();
    for (int f = 0; f < A.n_mor(); ++f)
        for (int g = 0; g < B.n_mor(); ++g)
            P.mors.push_back({"(" + A.mors[f].name + "," + B.mors[g].name + ")",
                              A.mors[f].src * nb + B.mors[g].src,
                              A.mors[f].dst * nb + B.mors[g].dst});
    P.identity.resize(P.objects.size());
    for (int x = 0; x < A.n_obj(); ++x)
        for (int y = 0; y < nb; ++y)
            P.identity[x * nb + y] = A.identity[x] * mb + B.identity[y];
    const int n = static_cast<int>(P.mors.size());
    P.comp.assign(n, std::vector<int>(n, -1));
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            if (!P.composable(q, p)) continue;
            int fa = p / mb, ga = q / mb, fb = p % mb, gb = q % mb;
            int ca = A.compose(ga, fa), cb = B.compose(gb, fb);
            if (ca >= 0 && cb >= 0) P.comp[q][p] = ca * mb + cb;
        }
    return P;
}

}  // namespace cyctrace::cat
