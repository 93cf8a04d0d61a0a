#pragma once

#include <string>
#include <vector>

#include "simplicial.hpp"

namespace cyctrace::subdiv {

using simp::Idx;
using simp::SimplicialMap;
using simp::SimplicialSet;

/// r-fold concatenation of a monotone map f : [m] -> [n], block a of the
/// result sending a(m+1)+i to a(n+1)+f(i).
inline std::vector<int> concat_map(const std::vector<int>& f, int n, int r) {
    const int m = static_cast<int>(f.size()) - 1;
    std::vector<int> g(static_cast<std::size_t>(r) * (m + 1));
    for (int a = 0; a < r; ++a)
        for (int i = 0; i <= m; ++i) g[a * (m + 1) + i] = a * (n + 1) + f[i];
    return g;
}

inline std::vector<int> coface_map(int k, int i) {
    // delta_i : [k-1] -> [k]
    std::vector<int> f(k);
    for (int j = 0; j < k; ++j) f[j] = (j < i) ? j : j + 1;
    return f;
}

inline std::vector<int> codegeneracy_map(int k, int i) {
    // sigma_i : [k+1] -> [k]
    std::vector<int> f(k + 2);
    for (int j = 0; j <= k + 1; ++j) f[j] = (j <= i) ? j : j - 1;
    return f;
}

/// r-fold edgewise subdivision.  Degree-k simplices of the result are the
/// degree r(k+1)-1 simplices of the input; operators come from precomposition
/// with the r-fold concatenation of cofaces/codegeneracies.  For cyclic input
/// the result keeps the ambient operator t_{r(k+1)-1} (order multiplier
/// scaled by r) and `cr` holds the C_r-generator t_{r(k+1)-1}^{k+1}.
struct SubdividedComplex {
    int r = 1;
    int input_order_mult = 1;
    SimplicialSet result;
    std::vector<std::vector<Idx>> cr;

    bool has_cr() const { return !cr.empty(); }
};

inline SubdividedComplex edgewise_subdivide(const SimplicialSet& X, int r) {
    if (r < 1) throw std::invalid_argument("edgewise_subdivide: r must be >= 1");
    if (X.trunc < r - 1)
        throw std::invalid_argument("edgewise_subdivide: truncation too small (need >= r-1)");
    SubdividedComplex S;
    S.r = r;
    S.input_order_mult = X.cyclic_order_mult;
    SimplicialSet& Y = S.result;
    Y.trunc = (X.trunc + 1) / r - 1;
    const int M = Y.trunc;
    auto big = [&](int k) { return r * (k + 1) - 1; };
    Y.counts.resize(M + 1);
    for (int k = 0; k <= M; ++k) Y.counts[k] = X.counts[big(k)];
    Y.faces.resize(M + 1);
    Y.degens.resize(M + 1);
    for (int k = 1; k <= M; ++k) {
        Y.faces[k].assign(k + 1, std::vector<Idx>(Y.counts[k]));
        for (int i = 0; i <= k; ++i) {
            auto g = concat_map(coface_map(k, i), k, r);
            for (Idx x = 0; x < Y.counts[k]; ++x)
                Y.faces[k][i][x] = simp::apply_monotone(X, big(k), x, g).second;
        }
    }
    for (int k = 0; k <= M - 1; ++k) {
        Y.degens[k].assign(k + 1, std::vector<Idx>(Y.counts[k]));
        for (int i = 0; i <= k; ++i) {
            auto g = concat_map(codegeneracy_map(k, i), k, r);
            for (Idx x = 0; x < Y.counts[k]; ++x)
                Y.degens[k][i][x] = simp::apply_monotone(X, big(k), x, g).second;
        }
    }
    if (X.has_cyclic()) {
        Y.cyclic.resize(M + 1);
        S.cr.resize(M + 1);
        Y.cyclic_order_mult = r * X.cyclic_order_mult;
        for (int k = 0; k <= M; ++k) {
            Y.cyclic[k] = X.cyclic[big(k)];
            S.cr[k].resize(Y.counts[k]);
            for (Idx x = 0; x < Y.counts[k]; ++x) S.cr[k][x] = X.cyc_pow(big(k), x, k + 1);
        }
    }
    return S;
}

/// Full validation of a subdivision: the result's simplicial (and ambient
/// r-cyclic) identities, plus the C_r-generator laws.
inline ValidationReport validate_subdivided(const SubdividedComplex& S) {
    ValidationReport rep = simp::validate(S.result);
    if (!S.has_cr()) return rep;
    const SimplicialSet& Y = S.result;
    const long long ord = static_cast<long long>(S.r) * S.input_order_mult;
    for (int k = 0; k <= Y.trunc; ++k)
        for (Idx x = 0; x < Y.counts[k]; ++x) {
            Idx y = x;
            for (long long j = 0; j < ord; ++j) y = S.cr[k][y];
            if (y != x) rep.add("cr_generator^r = id", k, simp::simplex_name(k, x));
        }
    for (int k = 1; k <= Y.trunc; ++k)
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < Y.counts[k]; ++x)
                if (Y.face(k, i, S.cr[k][x]) != S.cr[k - 1][Y.face(k, i, x)])
                    rep.add("cr_generator commutes with d_i", k, simp::simplex_name(k, x),
                            "i=" + std::to_string(i));
    for (int k = 0; k + 1 <= Y.trunc; ++k)
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < Y.counts[k]; ++x)
                if (Y.degen(k, i, S.cr[k][x]) != S.cr[k + 1][Y.degen(k, i, x)])
                    rep.add("cr_generator commutes with s_i", k, simp::simplex_name(k, x),
                            "i=" + std::to_string(i));
    return rep;
}

/// Degreewise fixed points of the C_r-generator, with the inclusion map.
/// The restricted cyclic operator is validated mechanically by the caller
/// (the claim that it is an honest cyclic structure is checked, not assumed).
struct FixedSubcomplex {
    SimplicialSet complex;
    SimplicialMap inclusion;      // fixed -> subdivided
    ValidationReport closure;     // operator closure failures, if any
};

inline FixedSubcomplex fixed_subcomplex(const SubdividedComplex& S) {
    FixedSubcomplex F;
    const SimplicialSet& Y = S.result;
    const int M = Y.trunc;
    if (!S.has_cr()) {  // r = 1 on a plain simplicial set: everything is fixed
        F.complex = Y;
        F.inclusion.level.resize(M + 1);
        for (int k = 0; k <= M; ++k) {
            F.inclusion.level[k].resize(Y.counts[k]);
            for (Idx x = 0; x < Y.counts[k]; ++x) F.inclusion.level[k][x] = x;
        }
        return F;
    }
    std::vector<std::vector<Idx>> keep(M + 1);
    std::vector<std::vector<int>> pos(M + 1);
    for (int k = 0; k <= M; ++k) {
        pos[k].assign(Y.counts[k], -1);
        for (Idx x = 0; x < Y.counts[k]; ++x)
            if (S.cr[k][x] == x) {
                pos[k][x] = static_cast<int>(keep[k].size());
                keep[k].push_back(x);
            }
    }
    SimplicialSet& Z = F.complex;
    Z.trunc = M;
    Z.counts.resize(M + 1);
    for (int k = 0; k <= M; ++k) Z.counts[k] = static_cast<Idx>(keep[k].size());
    Z.faces.resize(M + 1);
    Z.degens.resize(M + 1);
    Z.cyclic.resize(M + 1);
    Z.cyclic_order_mult = 1;  // validated, not assumed
    auto image = [&](int deg, Idx ambient, const char* what) -> Idx {
        if (pos[deg][ambient] < 0) {
            F.closure.add(std::string("fixed points closed under ") + what, deg,
                          simp::simplex_name(deg, ambient));
            return 0;
        }
        return static_cast<Idx>(pos[deg][ambient]);
    };
    for (int k = 1; k <= M; ++k) {
        Z.faces[k].assign(k + 1, std::vector<Idx>(Z.counts[k]));
        for (int i = 0; i <= k; ++i)
            for (Idx z = 0; z < Z.counts[k]; ++z)
                Z.faces[k][i][z] = image(k - 1, Y.face(k, i, keep[k][z]), "d_i");
    }
    for (int k = 0; k <= M - 1; ++k) {
        Z.degens[k].assign(k + 1, std::vector<Idx>(Z.counts[k]));
        for (int i = 0; i <= k; ++i)
            for (Idx z = 0; z < Z.counts[k]; ++z)
                Z.degens[k][i][z] = image(k + 1, Y.degen(k, i, keep[k][z]), "s_i");
    }
    for (int k = 0; k <= M; ++k) {
        Z.cyclic[k].resize(Z.counts[k]);
        for (Idx z = 0; z < Z.counts[k]; ++z)
            Z.cyclic[k][z] = image(k, Y.cyc(k, keep[k][z]), "t_k");
    }
    F.inclusion.level.resize(M + 1);
    for (int k = 0; k <= M; ++k) F.inclusion.level[k] = keep[k];
    return F;
}

/// The simplicial companion of the last-vertex cosimplicial inclusion:
/// in degree k the (r-1)(k+1)-fold iterate of d_0, mapping sd_r X -> X.
inline SimplicialMap dbar_map(const SimplicialSet& X, int r) {
    if (r < 1) throw std::invalid_argument("dbar_map: r must be >= 1");
    if (X.trunc < r - 1) throw std::invalid_argument("dbar_map: truncation too small");
    const int M = (X.trunc + 1) / r - 1;
    SimplicialMap f;
    f.level.resize(M + 1);
    for (int k = 0; k <= M; ++k) {
        const int big = r * (k + 1) - 1;
        f.level[k].resize(X.counts[big]);
        for (Idx x = 0; x < X.counts[big]; ++x) {
            Idx y = x;
            for (int j = 0; j < (r - 1) * (k + 1); ++j) y = X.face(big - j, 0, y);
            f.level[k][x] = y;
        }
    }
    return f;
}

}  // namespace cyctrace::subdiv
