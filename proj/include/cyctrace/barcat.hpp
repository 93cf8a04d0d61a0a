#pragma once

#include <map>
#include <string>
#include <vector>

#include "category.hpp"
#include "simplicial.hpp"
#include "subdivision.hpp"

namespace cyctrace::bar {

using cat::FinCategory;
using simp::Idx;
using simp::SimplicialMap;
using simp::SimplicialSet;

// ---------------------------------------------------------------------------
// monoids as one-object categories
// ---------------------------------------------------------------------------

struct Monoid {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;  // table[a][b] = a*b
    int unit = 0;

    int size() const { return static_cast<int>(names.size()); }
    int mul(int a, int b) const { return table[a][b]; }
};

inline Monoid cyclic_group(int n) {
    Monoid M;
    M.unit = 0;
    for (int i = 0; i < n; ++i) M.names.push_back(std::to_string(i));
    M.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) M.table[a][b] = (a + b) % n;
    return M;
}

inline Monoid trivial_monoid() { return cyclic_group(1); }

/// {1, x} with x^2 = x.
inline Monoid idempotent2() {
    Monoid M;
    M.unit = 0;
    M.names = {"1", "x"};
    M.table = {{0, 1}, {1, 1}};
    return M;
}

/// Symmetric group on three letters; elements are the permutations of
/// {0,1,2} in one-line notation, composed as functions.
inline Monoid symmetric_s3() {
    Monoid M;
    M.unit = 0;
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
        M.names.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
    const int n = 6;
    M.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c;
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            for (int j = 0; j < n; ++j)
                if (perms[j] == c) M.table[a][b] = j;
        }
    return M;
}

inline FinCategory monoid_category(const Monoid& M, const std::string& obj = "*") {
    FinCategory C;
    C.objects = {obj};
    for (int i = 0; i < M.size(); ++i) C.mors.push_back({M.names[i], 0, 0});
    C.identity = {M.unit};
    C.comp.assign(M.size(), std::vector<int>(M.size()));
    for (int g = 0; g < M.size(); ++g)
        for (int f = 0; f < M.size(); ++f) C.comp[g][f] = M.mul(g, f);
    return C;
}

/// Number of conjugacy classes of a finite group given by its table.
/// Independent of the chain-level route to H_0 of the cyclic bar.
inline int conjugacy_class_count(const Monoid& G) {
    const int n = G.size();
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (G.mul(a, b) == G.unit && G.mul(b, a) == G.unit) inv[a] = b;
    for (int a = 0; a < n; ++a)
        if (inv[a] < 0) throw std::invalid_argument("conjugacy_class_count: not a group");
    std::vector<int> cls(n, -1);
    int count = 0;
    for (int a = 0; a < n; ++a) {
        if (cls[a] >= 0) continue;
        for (int h = 0; h < n; ++h) cls[G.mul(G.mul(h, a), inv[h])] = count;
        ++count;
    }
    return count;
}

inline bool is_groupoid_like(const FinCategory& C) {
    for (int f = 0; f < C.n_mor(); ++f) {
        bool inv = false;
        for (int g = 0; g < C.n_mor(); ++g)
            if (C.composable(g, f) && C.composable(f, g) &&
                C.compose(g, f) == C.identity[C.mors[f].src] &&
                C.compose(f, g) == C.identity[C.mors[f].dst]) {
                inv = true;
                break;
            }
        if (!inv) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// cyclic bar simplices as tuples (f_0,...,f_k): f_0 in C(c_0,c_k) and
// f_i in C(c_i,c_{i-1}); the structure maps are the tuple formulas below and
// the tabulated complexes are materialized from them.
// ---------------------------------------------------------------------------

using Tuple = std::vector<int>;

inline bool is_bar_tuple(const FinCategory& C, const Tuple& t) {
    const int k = static_cast<int>(t.size()) - 1;
    if (k < 0) return false;
    for (int i = 0; i < k; ++i)
        if (C.mors[t[i + 1]].dst != C.mors[t[i]].src) return false;
    return C.mors[t[0]].dst == C.mors[t[k]].src;
}

/// d_i: compose f_i into the previous slot; d_k wraps f_k into f_0.
inline Tuple bar_face(const FinCategory& C, Tuple t, int i) {
    const int k = static_cast<int>(t.size()) - 1;
    if (i < k) {
        t[i] = C.compose(t[i], t[i + 1]);
        t.erase(t.begin() + i + 1);
    } else {
        t[0] = C.compose(t[k], t[0]);
        t.pop_back();
    }
    return t;
}

/// s_i: insert the identity of c_i = src(f_i) after slot i.
inline Tuple bar_degen(const FinCategory& C, Tuple t, int i) {
    t.insert(t.begin() + i + 1, C.identity[C.mors[t[i]].src]);
    return t;
}

/// t_k: rotate the last morphism to the front.
inline Tuple bar_cyc(Tuple t) {
    int last = t.back();
    t.pop_back();
    t.insert(t.begin(), last);
    return t;
}

inline Tuple bar_cyc_pow(Tuple t, long long e) {
    for (long long i = 0; i < e; ++i) t = bar_cyc(std::move(t));
    return t;
}

/// The r-fold block repetition (the diagonal into the C_r-fixed points).
inline Tuple bar_delta(const Tuple& t, int r) {
    Tuple u;
    u.reserve(t.size() * r);
    for (int j = 0; j < r; ++j) u.insert(u.end(), t.begin(), t.end());
    return u;
}

/// Read off one block of an r-fold repetition.
inline Tuple bar_restrict(const Tuple& t, int r) {
    return Tuple(t.begin(), t.begin() + static_cast<long>(t.size() / r));
}

/// Frobenius on tuples: the (r-1)(k+1)-fold d_0-iterate of the diagonal.
inline Tuple bar_frobenius(const FinCategory& C, const Tuple& t, int r) {
    const int k = static_cast<int>(t.size()) - 1;
    Tuple u = bar_delta(t, r);
    for (int j = 0; j < (r - 1) * (k + 1); ++j) u = bar_face(C, std::move(u), 0);
    return u;
}

/// Nerve chains (f_1,...,f_k) with f_i: c_i -> c_{i-1}; degree 0 is an object.
inline bool is_nerve_chain(const FinCategory& C, const Tuple& t) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (C.mors[t[i + 1]].dst != C.mors[t[i]].src) return false;
    return true;
}

/// Projection to the nerve: forget the morphism from c_0 to c_k.
inline Tuple bar_project(const Tuple& t) { return Tuple(t.begin() + 1, t.end()); }

// ---------------------------------------------------------------------------
// materialized complexes
// ---------------------------------------------------------------------------

struct BarComplex {
    SimplicialSet X;
    std::vector<std::vector<Tuple>> tuples;
    std::vector<std::map<Tuple, Idx>> index;

    Idx find(int k, const Tuple& t) const { return index[k].at(t); }
};

/// All composable (k+1)-tuples with the cyclic-bar chain condition, in
/// lexicographic order.
inline std::vector<Tuple> enumerate_bar_tuples(const FinCategory& C, int k) {
    std::vector<Tuple> out;
    Tuple cur;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k + 1) {
            if (C.mors[cur[0]].dst == C.mors[cur[k]].src) out.push_back(cur);
            return;
        }
        for (int f = 0; f < C.n_mor(); ++f) {
            if (pos >= 1 && C.mors[f].dst != C.mors[cur[pos - 1]].src) continue;
            cur.push_back(f);
            self(self, pos + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline BarComplex cyclic_bar(const FinCategory& C, int N) {
    BarComplex B;
    B.X.trunc = N;
    B.tuples.resize(N + 1);
    B.index.resize(N + 1);
    B.X.counts.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        B.tuples[k] = enumerate_bar_tuples(C, k);
        B.X.counts[k] = static_cast<Idx>(B.tuples[k].size());
        for (Idx i = 0; i < B.X.counts[k]; ++i) B.index[k][B.tuples[k][i]] = i;
    }
    B.X.faces.resize(N + 1);
    B.X.degens.resize(N + 1);
    B.X.cyclic.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (k >= 1) {
            B.X.faces[k].assign(k + 1, std::vector<Idx>(B.X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < B.X.counts[k]; ++x)
                    B.X.faces[k][i][x] = B.index[k - 1].at(bar_face(C, B.tuples[k][x], i));
        }
        if (k <= N - 1) {
            B.X.degens[k].assign(k + 1, std::vector<Idx>(B.X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < B.X.counts[k]; ++x)
                    B.X.degens[k][i][x] = B.index[k + 1].at(bar_degen(C, B.tuples[k][x], i));
        }
        B.X.cyclic[k].resize(B.X.counts[k]);
        for (Idx x = 0; x < B.X.counts[k]; ++x)
            B.X.cyclic[k][x] = B.index[k].at(bar_cyc(B.tuples[k][x]));
    }
    return B;
}

struct NerveComplex {
    SimplicialSet X;
    std::vector<std::vector<Tuple>> chains;  // degree 0 chains are empty; object stored separately
    std::vector<int> vertex_object;          // degree-0 simplex -> object
    std::vector<std::map<Tuple, Idx>> index;
    std::vector<int> object_vertex;          // object -> degree-0 simplex
};

inline NerveComplex nerve(const FinCategory& C, int N) {
    NerveComplex Nv;
    Nv.X.trunc = N;
    Nv.chains.resize(N + 1);
    Nv.index.resize(N + 1);
    Nv.X.counts.resize(N + 1);
    // degree 0: objects
    Nv.object_vertex.resize(C.n_obj());
    for (int o = 0; o < C.n_obj(); ++o) {
        Nv.object_vertex[o] = o;
        Nv.vertex_object.push_back(o);
    }
    Nv.X.counts[0] = static_cast<Idx>(C.n_obj());
    // higher degrees: composable chains
    for (int k = 1; k <= N; ++k) {
        Tuple cur;
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == k) {
                Nv.index[k][cur] = static_cast<Idx>(Nv.chains[k].size());
                Nv.chains[k].push_back(cur);
                return;
            }
            for (int f = 0; f < C.n_mor(); ++f) {
                if (pos >= 1 && C.mors[f].dst != C.mors[cur[pos - 1]].src) continue;
                cur.push_back(f);
                self(self, pos + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        Nv.X.counts[k] = static_cast<Idx>(Nv.chains[k].size());
    }
    auto chain_index = [&](int k, const Tuple& t) -> Idx { return Nv.index[k].at(t); };
    Nv.X.faces.resize(N + 1);
    Nv.X.degens.resize(N + 1);
    for (int k = 1; k <= N; ++k) {
        Nv.X.faces[k].assign(k + 1, std::vector<Idx>(Nv.X.counts[k]));
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < Nv.X.counts[k]; ++x) {
                Tuple t = Nv.chains[k][x];
                if (k == 1) {
                    // the edge f_1: c_1 -> c_0; d_0 drops c_0, d_1 drops c_1
                    int obj = (i == 0) ? C.mors[t[0]].src : C.mors[t[0]].dst;
                    Nv.X.faces[k][i][x] = static_cast<Idx>(Nv.object_vertex[obj]);
                    continue;
                }
                if (i == 0) {
                    t.erase(t.begin());
                } else if (i == k) {
                    t.pop_back();
                } else {
                    t[i - 1] = C.compose(t[i - 1], t[i]);
                    t.erase(t.begin() + i);
                }
                Nv.X.faces[k][i][x] = chain_index(k - 1, t);
            }
    }
    for (int k = 0; k <= N - 1; ++k) {
        Nv.X.degens[k].assign(k + 1, std::vector<Idx>(Nv.X.counts[k]));
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < Nv.X.counts[k]; ++x) {
                if (k == 0) {
                    Tuple t = {C.identity[Nv.vertex_object[x]]};
                    Nv.X.degens[k][i][x] = chain_index(1, t);
                    continue;
                }
                Tuple t = Nv.chains[k][x];
                int obj = (i == 0) ? C.mors[t[0]].dst : C.mors[t[i - 1]].src;
                t.insert(t.begin() + i, C.identity[obj]);
                Nv.X.degens[k][i][x] = chain_index(k + 1, t);
            }
    }
    return Nv;
}

// ---------------------------------------------------------------------------
// the operator maps, materialized
// ---------------------------------------------------------------------------

/// Frobenius endomorphism of the materialized bar, degreewise for
/// k <= (N+1)/r - 1.  Throws when the truncation admits no degree at all.
inline SimplicialMap frobenius_bar(const FinCategory& C, const BarComplex& B, int r) {
    const int M = (B.X.trunc + 1) / r - 1;
    if (M < 0) throw std::invalid_argument("frobenius_bar: truncation too small");
    SimplicialMap F;
    F.level.resize(M + 1);
    for (int k = 0; k <= M; ++k) {
        F.level[k].resize(B.X.counts[k]);
        for (Idx x = 0; x < B.X.counts[k]; ++x)
            F.level[k][x] = B.find(k, bar_frobenius(C, B.tuples[k][x], r));
    }
    return F;
}

/// Diagonal into the C_r-fixed subcomplex of the subdivision and its inverse.
struct DiagonalRestriction {
    subdiv::SubdividedComplex sd;
    subdiv::FixedSubcomplex fixed;
    SimplicialMap delta;     // bar -> fixed
    SimplicialMap restrict;  // fixed -> bar
};

inline DiagonalRestriction diagonal_restriction(const FinCategory& C, const BarComplex& B, int r) {
    (void)C;  // the tuple formulas need only the indexing carried by B
    DiagonalRestriction D;
    D.sd = subdiv::edgewise_subdivide(B.X, r);
    D.fixed = subdiv::fixed_subcomplex(D.sd);
    const int M = D.sd.result.trunc;
    std::vector<std::vector<int>> fixed_pos(M + 1);
    for (int k = 0; k <= M; ++k) {
        fixed_pos[k].assign(D.sd.result.counts[k], -1);
        for (Idx z = 0; z < D.fixed.complex.counts[k]; ++z)
            fixed_pos[k][D.fixed.inclusion.level[k][z]] = static_cast<int>(z);
    }
    D.delta.level.resize(M + 1);
    D.restrict.level.resize(M + 1);
    for (int k = 0; k <= M; ++k) {
        const int big = r * (k + 1) - 1;
        D.delta.level[k].resize(B.X.counts[k]);
        for (Idx x = 0; x < B.X.counts[k]; ++x) {
            Idx ambient = B.find(big, bar_delta(B.tuples[k][x], r));
            int z = fixed_pos[k][ambient];
            if (z < 0) throw std::logic_error("diagonal_restriction: diagonal missed the fixed points");
            D.delta.level[k][x] = static_cast<Idx>(z);
        }
        D.restrict.level[k].resize(D.fixed.complex.counts[k]);
        for (Idx z = 0; z < D.fixed.complex.counts[k]; ++z) {
            Idx ambient = D.fixed.inclusion.level[k][z];
            D.restrict.level[k][z] = B.find(k, bar_restrict(B.tuples[big][ambient], r));
        }
    }
    return D;
}

/// (f_0,...,f_k) -> (f_1,...,f_k), degreewise onto the nerve.
inline SimplicialMap project_to_nerve(const FinCategory& C, const BarComplex& B,
                                      const NerveComplex& Nv) {
    const int M = std::min(B.X.trunc, Nv.X.trunc);
    SimplicialMap P;
    P.level.resize(M + 1);
    for (int k = 0; k <= M; ++k) {
        P.level[k].resize(B.X.counts[k]);
        for (Idx x = 0; x < B.X.counts[k]; ++x) {
            const Tuple& t = B.tuples[k][x];
            if (k == 0)
                P.level[k][x] = static_cast<Idx>(Nv.object_vertex[C.mors[t[0]].src]);
            else
                P.level[k][x] = Nv.index[k].at(bar_project(t));
        }
    }
    return P;
}

}  // namespace cyctrace::bar
