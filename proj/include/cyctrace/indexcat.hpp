#pragma once

#include <map>
#include <string>
#include <vector>

#include "barcat.hpp"
#include "category.hpp"

namespace cyctrace::idx {

using cat::CommaCategory;
using cat::FinCategory;
using cat::Functor;

// ---------------------------------------------------------------------------
// the index category I
// ---------------------------------------------------------------------------

/// I truncated to objects 1..B: a morphism m -> n is a pair (r,s) with
/// m = r*n*s, composing componentwise.  F_r = (r,1), R_s = (1,s).
struct IndexCategory {
    FinCategory cat;
    struct MorData {
        int m, n, r, s;
    };
    std::vector<MorData> data;
    std::map<std::array<int, 3>, int> lookup;  // (m, r, s) -> morphism (n is determined)
    int bound = 0;

    int find(int m, int r, int s) const {
        auto it = lookup.find({m, r, s});
        return it == lookup.end() ? -1 : it->second;
    }
    int frobenius(int r, int n) const { return find(r * n, r, 1); }  // F_r : rn -> n
    int restriction(int s, int n) const { return find(n * s, 1, s); }  // R_s : ns -> n
};

inline IndexCategory build_index_category(int B) {
    if (B < 1) throw std::invalid_argument("build_index_category: bound must be >= 1");
    IndexCategory I;
    I.bound = B;
    for (int n = 1; n <= B; ++n) I.cat.objects.push_back(std::to_string(n));
    for (int m = 1; m <= B; ++m)
        for (int r = 1; r <= m; ++r) {
            if (m % r) continue;
            for (int s = 1; s <= m / r; ++s) {
                if ((m / r) % s) continue;
                int n = m / (r * s);
                I.lookup[{m, r, s}] = static_cast<int>(I.data.size());
                I.data.push_back({m, n, r, s});
                I.cat.mors.push_back({"F" + std::to_string(r) + "R" + std::to_string(s) + ":" +
                                          std::to_string(m) + "->" + std::to_string(n),
                                      m - 1, n - 1});
            }
        }
    I.cat.identity.resize(B);
    for (int n = 1; n <= B; ++n) I.cat.identity[n - 1] = I.find(n, 1, 1);
    const int M = static_cast<int>(I.data.size());
    I.cat.comp.assign(M, std::vector<int>(M, -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (I.data[f].n != I.data[g].m) continue;
            I.cat.comp[g][f] = I.find(I.data[f].m, I.data[g].r * I.data[f].r,
                                      I.data[g].s * I.data[f].s);
        }
    return I;
}

/// The unique factorization of a morphism as F_r . R_s; checked against the
/// composition table by the caller's tests.
inline std::pair<int, int> factor_unique(const IndexCategory& I, int mor) {
    return {I.data[mor].r, I.data[mor].s};
}

// ---------------------------------------------------------------------------
// category-valued contravariant functors and the Grothendieck construction
// ---------------------------------------------------------------------------

/// Contravariant F: for k : K -> K' in the base, action[k] maps fiber[K']
/// to fiber[K].  -1 entries mark images falling outside a truncation bound.
struct CatValuedFunctor {
    FinCategory base;
    std::vector<FinCategory> fiber;
    std::vector<Functor> action;
};

inline ValidationReport validate_catfunctor(const CatValuedFunctor& F) {
    ValidationReport rep;
    if (static_cast<int>(F.fiber.size()) != F.base.n_obj() ||
        static_cast<int>(F.action.size()) != F.base.n_mor()) {
        rep.add("schema: cat-valued functor", -1, "", "table sizes");
        return rep;
    }
    rep.merge(cat::validate_category(F.base));
    for (int o = 0; o < F.base.n_obj(); ++o) rep.merge(cat::validate_category(F.fiber[o]));
    if (!rep.ok()) return rep;
    for (int k = 0; k < F.base.n_mor(); ++k) {
        const auto& m = F.base.mors[k];
        rep.merge(cat::check_functor(F.fiber[m.dst], F.fiber[m.src], F.action[k], true));
    }
    // F(id) = id where defined
    for (int o = 0; o < F.base.n_obj(); ++o) {
        const Functor& A = F.action[F.base.identity[o]];
        for (int x = 0; x < F.fiber[o].n_obj(); ++x)
            if (A.ob[x] >= 0 && A.ob[x] != x)
                rep.add("F(id) = id", -1, F.fiber[o].objects[x]);
        for (int f = 0; f < F.fiber[o].n_mor(); ++f)
            if (A.mor[f] >= 0 && A.mor[f] != f)
                rep.add("F(id) = id", -1, F.fiber[o].mors[f].name);
    }
    // F(k'. k) = F(k) . F(k') where every image involved is defined
    for (int k2 = 0; k2 < F.base.n_mor(); ++k2)
        for (int k1 = 0; k1 < F.base.n_mor(); ++k1) {
            if (!F.base.composable(k2, k1)) continue;
            int k21 = F.base.compose(k2, k1);
            if (k21 < 0) continue;
            const auto& Fk1 = F.action[k1];
            const auto& Fk2 = F.action[k2];
            const auto& Fk21 = F.action[k21];
            const FinCategory& top = F.fiber[F.base.mors[k2].dst];
            for (int x = 0; x < top.n_obj(); ++x) {
                if (Fk2.ob[x] < 0 || Fk21.ob[x] < 0) continue;
                if (Fk1.ob[Fk2.ob[x]] < 0) continue;
                if (Fk1.ob[Fk2.ob[x]] != Fk21.ob[x])
                    rep.add("F(k'.k) = F(k)F(k')", -1, top.objects[x],
                            F.base.mors[k2].name + "," + F.base.mors[k1].name);
            }
            for (int f = 0; f < top.n_mor(); ++f) {
                if (Fk2.mor[f] < 0 || Fk21.mor[f] < 0) continue;
                if (Fk1.mor[Fk2.mor[f]] < 0) continue;
                if (Fk1.mor[Fk2.mor[f]] != Fk21.mor[f])
                    rep.add("F(k'.k) = F(k)F(k')", -1, top.mors[f].name,
                            F.base.mors[k2].name + "," + F.base.mors[k1].name);
            }
        }
    return rep;
}

/// The Grothendieck construction K x| F with objects (K,A) and morphisms
/// (k, a : A -> F(k)(A')), composed by (k',a') . (k,a) = (k'.k, F(k)(a').a).
struct GrothCategory {
    FinCategory cat;
    std::vector<std::pair<int, int>> objects;             // (base object, fiber object)
    std::vector<std::pair<int, int>> mor_data;            // (base morphism k, fiber morphism a)
    std::map<std::pair<int, int>, int> obj_lookup;
    std::map<std::array<int, 3>, int> mor_lookup;         // (k, a, dst object index)

    int obj(int K, int A) const { return obj_lookup.at({K, A}); }
    int mor(int k, int a, int dst_obj) const {
        auto it = mor_lookup.find({k, a, dst_obj});
        return it == mor_lookup.end() ? -1 : it->second;
    }
};

inline GrothCategory grothendieck_construct(const CatValuedFunctor& F) {
    auto laws = validate_catfunctor(F);
    if (!laws.ok())
        throw SchemaError("grothendieck_construct: functor-law violation: " +
                          laws.violations.front().str());
    GrothCategory G;
    G.cat.truncated = F.base.truncated;
    for (int K = 0; K < F.base.n_obj(); ++K)
        for (int A = 0; A < F.fiber[K].n_obj(); ++A) {
            G.obj_lookup[{K, A}] = static_cast<int>(G.objects.size());
            G.objects.push_back({K, A});
            G.cat.objects.push_back("(" + F.base.objects[K] + "," + F.fiber[K].objects[A] + ")");
        }
    // morphisms (K,A) -> (K',A'): base k : K -> K' with F(k)(A') defined,
    // together with a : A -> F(k)(A') in fiber[K]
    for (int k = 0; k < F.base.n_mor(); ++k) {
        const int K = F.base.mors[k].src, K2 = F.base.mors[k].dst;
        const FinCategory& fib = F.fiber[K];
        for (int A2 = 0; A2 < F.fiber[K2].n_obj(); ++A2) {
            int target = F.action[k].ob[A2];
            if (target < 0) continue;
            for (int a = 0; a < fib.n_mor(); ++a) {
                if (fib.mors[a].dst != target) continue;
                int dst_obj = G.obj(K2, A2);
                G.mor_lookup[{k, a, dst_obj}] = static_cast<int>(G.mor_data.size());
                G.mor_data.push_back({k, a});
                G.cat.mors.push_back({"(" + F.base.mors[k].name + "," + fib.mors[a].name + ")@" +
                                          std::to_string(dst_obj),
                                      G.obj(K, fib.mors[a].src), dst_obj});
            }
        }
    }
    G.cat.identity.resize(G.objects.size());
    for (std::size_t o = 0; o < G.objects.size(); ++o) {
        auto [K, A] = G.objects[o];
        int e = G.mor(F.base.identity[K], F.fiber[K].identity[A], static_cast<int>(o));
        if (e < 0) throw SchemaError("grothendieck_construct: missing identity");
        G.cat.identity[o] = e;
    }
    const int M = static_cast<int>(G.mor_data.size());
    G.cat.comp.assign(M, std::vector<int>(M, -1));
    for (int q = 0; q < M; ++q)
        for (int p = 0; p < M; ++p) {
            if (!G.cat.composable(q, p)) continue;
            auto [k2, a2] = G.mor_data[q];
            auto [k1, a1] = G.mor_data[p];
            int kk = F.base.compose(k2, k1);
            if (kk < 0) continue;
            int fa2 = F.action[k1].mor[a2];
            if (fa2 < 0) continue;
            int aa = F.fiber[F.base.mors[k1].src].compose(fa2, a1);
            if (aa < 0) continue;
            G.cat.comp[q][p] = G.mor(kk, aa, G.cat.mors[q].dst);
        }
    return G;
}

// ---------------------------------------------------------------------------
// instances
// ---------------------------------------------------------------------------

/// One-object base N<=B (multiplicative, truncated) acting on the
/// divisibility category N"<=B by multiplication; its Grothendieck
/// construction is I<=B.
inline CatValuedFunctor make_nn_functor(int B) {
    CatValuedFunctor F;
    F.base.truncated = true;
    F.base.objects = {"*"};
    for (int r = 1; r <= B; ++r) F.base.mors.push_back({"x" + std::to_string(r), 0, 0});
    F.base.identity = {0};
    F.base.comp.assign(B, std::vector<int>(B, -1));
    for (int r1 = 0; r1 < B; ++r1)
        for (int r2 = 0; r2 < B; ++r2)
            if ((r1 + 1) * (r2 + 1) <= B) F.base.comp[r1][r2] = (r1 + 1) * (r2 + 1) - 1;

    FinCategory Ncat;  // objects n, morphisms s : ns -> n
    for (int n = 1; n <= B; ++n) Ncat.objects.push_back(std::to_string(n));
    std::map<std::pair<int, int>, int> morid;  // (n, s)
    for (int n = 1; n <= B; ++n)
        for (int s = 1; n * s <= B; ++s) {
            morid[{n, s}] = static_cast<int>(Ncat.mors.size());
            Ncat.mors.push_back({"s" + std::to_string(s) + ":" + std::to_string(n * s) + "->" +
                                     std::to_string(n),
                                 n * s - 1, n - 1});
        }
    Ncat.identity.resize(B);
    for (int n = 1; n <= B; ++n) Ncat.identity[n - 1] = morid.at({n, 1});
    const int M = static_cast<int>(Ncat.mors.size());
    Ncat.comp.assign(M, std::vector<int>(M, -1));
    for (int q = 0; q < M; ++q)
        for (int p = 0; p < M; ++p)
            if (Ncat.composable(q, p)) {
                // p: n2*s2 -> n2 with n2 = q's source object + 1 ... recover (n,s)
                int n_q = Ncat.mors[q].dst + 1, s_q = (Ncat.mors[q].src + 1) / n_q;
                int s_p = (Ncat.mors[p].src + 1) / (Ncat.mors[p].dst + 1);
                Ncat.comp[q][p] = morid.at({n_q, s_q * s_p});
            }
    F.fiber.push_back(Ncat);

    F.action.resize(B);
    for (int r = 1; r <= B; ++r) {
        Functor& A = F.action[r - 1];
        A.ob.assign(B, -1);
        for (int n = 1; n <= B; ++n)
            if (r * n <= B) A.ob[n - 1] = r * n - 1;
        A.mor.assign(M, -1);
        for (int f = 0; f < M; ++f) {
            int n = Ncat.mors[f].dst + 1, s = (Ncat.mors[f].src + 1) / n;
            if (r * n * s <= B) A.mor[f] = morid.at({r * n, s});
        }
    }
    return F;
}

/// A right action of monoid G on monoid H (by endomorphisms), as a
/// cat-valued functor on one-object categories.  act[g][h] = h^g.
inline CatValuedFunctor make_action_functor(const bar::Monoid& G, const bar::Monoid& H,
                                            const std::vector<std::vector<int>>& act) {
    CatValuedFunctor F;
    F.base = bar::monoid_category(G, "*G");
    F.fiber.push_back(bar::monoid_category(H, "*H"));
    F.action.resize(G.size());
    for (int g = 0; g < G.size(); ++g) {
        F.action[g].ob = {0};
        F.action[g].mor = act[g];
    }
    return F;
}

/// Constant functor at the terminal category.
inline CatValuedFunctor make_terminal_functor(const FinCategory& K) {
    CatValuedFunctor F;
    F.base = K;
    FinCategory T;
    T.objects = {"pt"};
    T.mors = {{"id", 0, 0}};
    T.identity = {0};
    T.comp = {{0}};
    for (int o = 0; o < K.n_obj(); ++o) F.fiber.push_back(T);
    F.action.resize(K.n_mor());
    for (int k = 0; k < K.n_mor(); ++k) {
        F.action[k].ob = {0};
        F.action[k].mor = {0};
    }
    return F;
}

/// The discrete skeleton of I x| T: the circle replaced by Z/M, the action
/// of a morphism (r,s) raising to the r-th power.
inline CatValuedFunctor make_it_skeleton(const IndexCategory& I, int M) {
    CatValuedFunctor F;
    F.base = I.cat;
    bar::Monoid ZM = bar::cyclic_group(M);
    for (int o = 0; o < I.cat.n_obj(); ++o) F.fiber.push_back(bar::monoid_category(ZM, "T"));
    F.action.resize(I.cat.n_mor());
    for (int k = 0; k < I.cat.n_mor(); ++k) {
        F.action[k].ob = {0};
        F.action[k].mor.resize(M);
        for (int z = 0; z < M; ++z) F.action[k].mor[z] = (z * I.data[k].r) % M;
    }
    return F;
}

// ---------------------------------------------------------------------------
// Theta and Lemma-2.4 mechanics
// ---------------------------------------------------------------------------

struct ThetaReport {
    bool hypothesis_ok = false;     // every F(f) an iso of comma categories
    bool hypothesis_total = true;   // no truncation gaps encountered
    std::string hypothesis_witness;
    bool theta_functor_ok = false;
    bool theta_iso = false;         // bijective onto the target comma (bounded reading)
    bool theta_total = true;
    std::string theta_witness;
    bool implication_ok = false;    // hypothesis => theta iso, asserted

    bool pass_positive() const { return hypothesis_ok && theta_functor_ok && theta_iso && implication_ok; }
};

/// Lemma hypothesis: F(f) : (F(L) down A) -> (F(K) down F(f)A) is an
/// isomorphism of categories, for every f and A.  For truncated instances
/// the defined part must be injective and cover the whole target.
inline void check_lambda_hypothesis(const CatValuedFunctor& F, ThetaReport& rep) {
    rep.hypothesis_ok = true;
    for (int f = 0; f < F.base.n_mor(); ++f) {
        const int K = F.base.mors[f].src, L = F.base.mors[f].dst;
        for (int A = 0; A < F.fiber[L].n_obj(); ++A) {
            int FA = F.action[f].ob[A];
            if (FA < 0) {
                rep.hypothesis_total = false;
                continue;
            }
            CommaCategory dom = cat::comma_over(F.fiber[L], A);
            CommaCategory cod = cat::comma_over(F.fiber[K], FA);
            Functor Ff;
            Ff.ob.resize(dom.cat.n_obj());
            for (int x = 0; x < dom.cat.n_obj(); ++x) {
                int im = F.action[f].mor[dom.obj_mor[x]];
                if (im < 0) {
                    Ff.ob[x] = -1;
                    rep.hypothesis_total = false;
                    continue;
                }
                int pos = -1;
                for (std::size_t y = 0; y < cod.obj_mor.size(); ++y)
                    if (cod.obj_mor[y] == im) pos = static_cast<int>(y);
                Ff.ob[x] = pos;
            }
            Ff.mor.resize(dom.cat.n_mor());
            for (int g = 0; g < dom.cat.n_mor(); ++g) {
                int im = F.action[f].mor[dom.mor_of[g]];
                int from = Ff.ob[dom.cat.mors[g].src], to = Ff.ob[dom.cat.mors[g].dst];
                if (im < 0 || from < 0 || to < 0) {
                    Ff.mor[g] = -1;
                    rep.hypothesis_total = false;
                    continue;
                }
                int pos = -1;
                for (int h = 0; h < cod.cat.n_mor(); ++h)
                    if (cod.mor_of[h] == im && cod.cat.mors[h].src == from &&
                        cod.cat.mors[h].dst == to)
                        pos = h;
                Ff.mor[g] = pos;
            }
            auto verdict = cat::check_iso(dom.cat, cod.cat, Ff);
            if (!verdict.bounded_iso()) {
                rep.hypothesis_ok = false;
                if (rep.hypothesis_witness.empty())
                    rep.hypothesis_witness = "F(" + F.base.mors[f].name + ") at fiber object " +
                                             F.fiber[L].objects[A] + ": " + verdict.witness;
            }
        }
    }
}

/// Build Theta_{(K,A)} : (K down K) x (F(K) down A) -> (G down (K,A)) and
/// verify it is an isomorphism of categories.
inline void check_theta_at(const CatValuedFunctor& F, const GrothCategory& G, int K, int A,
                           ThetaReport& rep) {
    CommaCategory baseComma = cat::comma_over(F.base, K);
    CommaCategory fibComma = cat::comma_over(F.fiber[K], A);
    FinCategory dom = cat::product_category(baseComma.cat, fibComma.cat);
    CommaCategory target = cat::comma_over(G.cat, G.obj(K, A));

    const int mb = fibComma.cat.n_mor();
    const int nb = fibComma.cat.n_obj();
    Functor Th;
    Th.ob.assign(dom.n_obj(), -1);
    // object (k : K0 -> K, a : A0 -> A)  |->  (k, F(k)(a)) : (K0, F(k)A0) -> (K,A)
    auto groth_obj_of = [&](int x, int y) -> int {
        int k = baseComma.obj_mor[x];
        int a = fibComma.obj_mor[y];
        int fa = F.action[k].mor[a];
        if (fa < 0) return -1;
        int gm = G.mor(k, fa, G.obj(K, A));
        return gm;  // a morphism of G into (K,A); an object of the target comma
    };
    for (int x = 0; x < baseComma.cat.n_obj(); ++x)
        for (int y = 0; y < nb; ++y) {
            int gm = groth_obj_of(x, y);
            if (gm < 0) {
                rep.theta_total = false;
                continue;
            }
            int pos = -1;
            for (std::size_t t = 0; t < target.obj_mor.size(); ++t)
                if (target.obj_mor[t] == gm) pos = static_cast<int>(t);
            Th.ob[x * nb + y] = pos;
        }
    Th.mor.assign(dom.n_mor(), -1);
    for (int p = 0; p < dom.n_mor(); ++p) {
        int pa = p / mb, pb = p % mb;  // comma morphisms in base/fiber commas
        int from = Th.ob[dom.mors[p].src], to = Th.ob[dom.mors[p].dst];
        if (from < 0 || to < 0) {
            rep.theta_total = false;
            continue;
        }
        // underlying morphism (k0, F(k)(a0)) where k = source object's k
        int x_src = dom.mors[p].src / nb;
        int k = baseComma.obj_mor[x_src];
        int k0 = baseComma.mor_of[pa];
        int a0 = fibComma.mor_of[pb];
        int fa0 = F.action[k].mor[a0];
        if (fa0 < 0) {
            rep.theta_total = false;
            continue;
        }
        int und = G.mor(k0, fa0, G.cat.mors[target.obj_mor[to]].src);
        if (und < 0) {
            rep.theta_total = false;
            continue;
        }
        for (int h = 0; h < target.cat.n_mor(); ++h)
            if (target.mor_of[h] == und && target.cat.mors[h].src == from &&
                target.cat.mors[h].dst == to)
                Th.mor[p] = h;
    }
    auto laws = cat::check_functor(dom, target.cat, Th, true);
    if (!laws.ok() && rep.theta_witness.empty())
        rep.theta_witness = laws.violations.front().str();
    auto verdict = cat::check_iso(dom, target.cat, Th);
    rep.theta_functor_ok = rep.theta_functor_ok && laws.ok();
    rep.theta_iso = rep.theta_iso && verdict.bounded_iso();
    if (!verdict.bounded_iso() && rep.theta_witness.empty()) rep.theta_witness = verdict.witness;
}

/// Full report: lambda hypothesis over all (f, A), Theta at every object of
/// the construction, and the asserted implication between them.
inline ThetaReport check_theta_iso(const CatValuedFunctor& F) {
    ThetaReport rep;
    check_lambda_hypothesis(F, rep);
    GrothCategory G = grothendieck_construct(F);
    rep.theta_functor_ok = true;
    rep.theta_iso = true;
    for (std::size_t o = 0; o < G.objects.size(); ++o)
        check_theta_at(F, G, G.objects[o].first, G.objects[o].second, rep);
    rep.implication_ok = !rep.hypothesis_ok || (rep.theta_functor_ok && rep.theta_iso);
    return rep;
}

// ---------------------------------------------------------------------------
// the homotopy-Kan-extension scaffolding at the category level
// ---------------------------------------------------------------------------

struct KanReport {
    bool functors_ok = false;       // pi_K, r_K, j_K satisfy the functor laws
    bool lift_ok = false;           // pi . j = i_K and r . j = id
    bool adjunction_ok = false;     // counit exists, natural, triangle identities
    bool transform_ok = false;      // i_K r_K -> pi_K components (f,id) natural
    bool phi_psi_ok = false;        // Phi -> Psi triangles and naturality
    std::string witness;

    bool pass() const {
        return functors_ok && lift_ok && adjunction_ok && transform_ok && phi_psi_ok;
    }
};

namespace detail {

/// (K down p): objects (f : K -> L, A in F(L)) restricted to where F(f)(A)
/// is defined; morphisms are Grothendieck morphisms compatible over K.
struct KdownP {
    FinCategory cat;
    std::vector<std::pair<int, int>> objects;  // (base morphism f, fiber object A)
    std::vector<int> mor_groth;                // underlying Grothendieck morphism
    std::map<std::pair<int, int>, int> obj_lookup;
};

inline KdownP build_kdownp(const CatValuedFunctor& F, const GrothCategory& G, int K) {
    KdownP P;
    P.cat.truncated = F.base.truncated;
    for (int f = 0; f < F.base.n_mor(); ++f) {
        if (F.base.mors[f].src != K) continue;
        int L = F.base.mors[f].dst;
        for (int A = 0; A < F.fiber[L].n_obj(); ++A) {
            if (F.action[f].ob[A] < 0) continue;
            P.obj_lookup[{f, A}] = static_cast<int>(P.objects.size());
            P.objects.push_back({f, A});
            P.cat.objects.push_back("(" + F.base.mors[f].name + "," + F.fiber[L].objects[A] + ")");
        }
    }
    for (std::size_t a = 0; a < P.objects.size(); ++a)
        for (std::size_t b = 0; b < P.objects.size(); ++b) {
            auto [f, A] = P.objects[a];
            auto [f2, A2] = P.objects[b];
            int src = G.obj(F.base.mors[f].dst, A);
            int dst = G.obj(F.base.mors[f2].dst, A2);
            for (int gm = 0; gm < G.cat.n_mor(); ++gm) {
                if (G.cat.mors[gm].src != src || G.cat.mors[gm].dst != dst) continue;
                if (F.base.compose(G.mor_data[gm].first, f) != f2) continue;
                P.mor_groth.push_back(gm);
                P.cat.mors.push_back({G.cat.mors[gm].name + "|" + std::to_string(a) + ">" +
                                          std::to_string(b),
                                      static_cast<int>(a), static_cast<int>(b)});
            }
        }
    P.cat.identity.resize(P.objects.size());
    for (std::size_t a = 0; a < P.objects.size(); ++a) {
        auto [f, A] = P.objects[a];
        int idg = G.cat.identity[G.obj(F.base.mors[f].dst, A)];
        int found = -1;
        for (int m = 0; m < P.cat.n_mor(); ++m)
            if (P.mor_groth[m] == idg && P.cat.mors[m].src == static_cast<int>(a) &&
                P.cat.mors[m].dst == static_cast<int>(a))
                found = m;
        if (found < 0) throw SchemaError("kan scaffold: identity missing in (K down p)");
        P.cat.identity[a] = found;
    }
    const int n = P.cat.n_mor();
    P.cat.comp.assign(n, std::vector<int>(n, -1));
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p) {
            if (!P.cat.composable(q, p)) continue;
            int u = G.cat.compose(P.mor_groth[q], P.mor_groth[p]);
            if (u < 0) continue;
            for (int m = 0; m < n; ++m)
                if (P.mor_groth[m] == u && P.cat.mors[m].src == P.cat.mors[p].src &&
                    P.cat.mors[m].dst == P.cat.mors[q].dst)
                    P.cat.comp[q][p] = m;
        }
    return P;
}

}  // namespace detail

/// Mechanical verification of the proof scaffolding around the right Kan
/// extension along p: the functors pi_K, r_K, j_K, the adjunction j_K -| r_K,
/// the transformation i_K r_K -> pi_K, and the Phi -> Psi comparison.
inline KanReport verify_kan_scaffold(const CatValuedFunctor& F, int K) {
    KanReport rep;
    auto fail = [&](const std::string& w) {
        if (rep.witness.empty()) rep.witness = w;
    };
    ValidationReport flaws = validate_catfunctor(F);
    if (!flaws.ok()) {
        fail("functor input: " + flaws.violations.front().str());
        return rep;
    }
    GrothCategory G = grothendieck_construct(F);
    detail::KdownP P = detail::build_kdownp(F, G, K);
    const FinCategory& fibK = F.fiber[K];

    // pi_K : (K down p) -> G, forgetting the morphism from K
    Functor pi;
    pi.ob.resize(P.cat.n_obj());
    for (int o = 0; o < P.cat.n_obj(); ++o)
        pi.ob[o] = G.obj(F.base.mors[P.objects[o].first].dst, P.objects[o].second);
    pi.mor = P.mor_groth;

    // r_K : (K down p) -> F(K), (f,A) -> F(f)(A)
    Functor rk;
    rk.ob.resize(P.cat.n_obj());
    for (int o = 0; o < P.cat.n_obj(); ++o)
        rk.ob[o] = F.action[P.objects[o].first].ob[P.objects[o].second];
    rk.mor.resize(P.cat.n_mor());
    for (int m = 0; m < P.cat.n_mor(); ++m) {
        int f = P.objects[P.cat.mors[m].src].first;
        int a = G.mor_data[P.mor_groth[m]].second;
        rk.mor[m] = F.action[f].mor[a];
    }

    // j_K : F(K) -> (K down p), A -> (id_K, A)
    const int idK = F.base.identity[K];
    Functor jk;
    jk.ob.resize(fibK.n_obj());
    for (int A = 0; A < fibK.n_obj(); ++A) {
        auto it = P.obj_lookup.find({idK, A});
        jk.ob[A] = it == P.obj_lookup.end() ? -1 : it->second;
    }
    jk.mor.resize(fibK.n_mor());
    for (int a = 0; a < fibK.n_mor(); ++a) {
        jk.mor[a] = -1;
        int dst_obj = jk.ob[fibK.mors[a].dst];
        if (dst_obj < 0) continue;
        int und = G.mor(idK, a, G.obj(K, fibK.mors[a].dst));
        for (int m = 0; m < P.cat.n_mor(); ++m)
            if (P.mor_groth[m] == und && P.cat.mors[m].src == jk.ob[fibK.mors[a].src] &&
                P.cat.mors[m].dst == dst_obj)
                jk.mor[a] = m;
    }

    bool ok = true;
    for (auto* fn : {&pi, &rk, &jk})
        if (!fn->total()) {
            ok = false;
            fail("scaffold functor not total");
        }
    if (ok) {
        auto r1 = cat::check_functor(P.cat, G.cat, pi);
        auto r2 = cat::check_functor(P.cat, fibK, rk);
        auto r3 = cat::check_functor(fibK, P.cat, jk);
        ok = r1.ok() && r2.ok() && r3.ok();
        if (!r1.ok()) fail("pi_K: " + r1.violations.front().str());
        if (!r2.ok()) fail("r_K: " + r2.violations.front().str());
        if (!r3.ok()) fail("j_K: " + r3.violations.front().str());
    }
    rep.functors_ok = ok;
    if (!ok) return rep;

    // pi . j = i_K and r . j = id
    rep.lift_ok = true;
    for (int A = 0; A < fibK.n_obj(); ++A) {
        if (pi.ob[jk.ob[A]] != G.obj(K, A)) rep.lift_ok = false;
        if (rk.ob[jk.ob[A]] != A) rep.lift_ok = false;
    }
    for (int a = 0; a < fibK.n_mor(); ++a) {
        if (pi.mor[jk.mor[a]] != G.mor(idK, a, G.obj(K, fibK.mors[a].dst))) rep.lift_ok = false;
        if (rk.mor[jk.mor[a]] != a) rep.lift_ok = false;
    }
    if (!rep.lift_ok) fail("pi.j = i_K / r.j = id failed");

    // counit (f, id): j(r(f,A)) -> (f,A); unit is the identity
    std::vector<int> counit(P.cat.n_obj(), -1);
    rep.adjunction_ok = true;
    for (int o = 0; o < P.cat.n_obj(); ++o) {
        auto [f, A] = P.objects[o];
        int FA = rk.ob[o];
        int und = G.mor(f, fibK.identity[FA], pi.ob[o]);
        if (und < 0) {
            rep.adjunction_ok = false;
            fail("counit component missing");
            continue;
        }
        for (int m = 0; m < P.cat.n_mor(); ++m)
            if (P.mor_groth[m] == und && P.cat.mors[m].src == jk.ob[FA] &&
                P.cat.mors[m].dst == o)
                counit[o] = m;
        if (counit[o] < 0) {
            rep.adjunction_ok = false;
            fail("counit component missing in (K down p)");
        }
    }
    if (rep.adjunction_ok) {
        // naturality: m . eps_src = eps_dst . j(r(m))
        for (int m = 0; m < P.cat.n_mor(); ++m) {
            int src = P.cat.mors[m].src, dst = P.cat.mors[m].dst;
            int lhs = P.cat.compose(m, counit[src]);
            int rhs = P.cat.compose(counit[dst], jk.mor[rk.mor[m]]);
            if (lhs < 0 || lhs != rhs) {
                rep.adjunction_ok = false;
                fail("counit naturality at " + P.cat.mors[m].name);
            }
        }
        // triangle identities with identity unit
        for (int A = 0; A < fibK.n_obj(); ++A)
            if (counit[jk.ob[A]] != P.cat.identity[jk.ob[A]]) {
                rep.adjunction_ok = false;
                fail("triangle identity eps.j = id");
            }
        for (int o = 0; o < P.cat.n_obj(); ++o)
            if (rk.mor[counit[o]] != fibK.identity[rk.ob[o]]) {
                rep.adjunction_ok = false;
                fail("triangle identity r(eps) = id");
            }
    }

    // i_K r_K -> pi_K with components nu = (f, id) in G
    rep.transform_ok = true;
    for (int m = 0; m < P.cat.n_mor(); ++m) {
        int src = P.cat.mors[m].src, dst = P.cat.mors[m].dst;
        int nu_src = P.mor_groth[counit[src]];
        int nu_dst = P.mor_groth[counit[dst]];
        int ik_of_rm = G.mor(idK, rk.mor[m], G.obj(K, rk.ob[dst]));
        int lhs = G.cat.compose(P.mor_groth[m], nu_src);
        int rhs = G.cat.compose(nu_dst, ik_of_rm);
        if (lhs < 0 || lhs != rhs) {
            rep.transform_ok = false;
            fail("i_K r_K -> pi_K naturality at " + P.cat.mors[m].name);
        }
    }

    // Phi -> Psi comparison over each object (f: K -> L, A)
    rep.phi_psi_ok = true;
    CommaCategory baseComma = cat::comma_over(F.base, K);
    for (int o = 0; o < P.cat.n_obj() && rep.phi_psi_ok; ++o) {
        auto [f, A] = P.objects[o];
        const int L = F.base.mors[f].dst;
        CommaCategory upComma = cat::comma_over(P.cat, o);
        // objects of the domain: (k : K0 -> K) x ((f0,A0) -(l,a)-> (f,A))
        for (std::size_t x = 0; x < baseComma.obj_mor.size() && rep.phi_psi_ok; ++x)
            for (std::size_t y = 0; y < upComma.obj_mor.size() && rep.phi_psi_ok; ++y) {
                int k = baseComma.obj_mor[x];
                int up = upComma.obj_mor[y];  // morphism of (K down p) into (f,A)
                int src_o = P.cat.mors[up].src;
                auto [f0, A0] = P.objects[src_o];
                int gm = P.mor_groth[up];  // (l, a)
                int a = G.mor_data[gm].second;
                int e = F.base.compose(f0, k);  // f0 . k : K0 -> L0
                int fk = F.base.compose(f, k);
                if (e < 0 || fk < 0) continue;  // outside truncation
                int Fe_a = F.action[e].mor[a];
                int Fe_A0 = F.action[e].ob[A0];
                if (Fe_a < 0 || Fe_A0 < 0) continue;
                int phi = G.mor(fk, Fe_a, G.obj(L, A));
                int psi = gm;
                int tau = G.mor(e, F.fiber[F.base.mors[e].src].identity[Fe_A0],
                                G.cat.mors[gm].src);
                if (phi < 0 || tau < 0) {
                    rep.phi_psi_ok = false;
                    fail("Phi/tau component missing");
                    break;
                }
                if (G.cat.compose(psi, tau) != phi) {
                    rep.phi_psi_ok = false;
                    fail("Phi -> Psi triangle fails at (" + F.base.mors[k].name + "," +
                         P.cat.mors[up].name + ")");
                }
            }
    }
    return rep;
}

}  // namespace cyctrace::idx
