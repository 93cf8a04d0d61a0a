#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "util.hpp"

namespace cyctrace::simp {

using Idx = std::uint32_t;

/// A simplicial set truncated at degree N, with all operator values tabulated.
/// Simplices of degree k are the indices 0..counts[k]-1.  When `cyclic` is
/// nonempty the structure is cyclic with operators t_k; `cyclic_order_mult`
/// is the order multiplier r in t_k^{r(k+1)} = id (r = 1 for an honest cyclic
/// set, r > 1 for the ambient operator of an r-fold edgewise subdivision).
struct SimplicialSet {
    int trunc = 0;
    std::vector<Idx> counts;
    // faces[k][i] : X_k -> X_{k-1}, defined for 1 <= k <= trunc, 0 <= i <= k
    std::vector<std::vector<std::vector<Idx>>> faces;
    // degens[k][i] : X_k -> X_{k+1}, defined for 0 <= k <= trunc-1, 0 <= i <= k
    std::vector<std::vector<std::vector<Idx>>> degens;
    // cyclic[k] : X_k -> X_k bijection (empty when not cyclic)
    std::vector<std::vector<Idx>> cyclic;
    int cyclic_order_mult = 1;

    bool has_cyclic() const { return !cyclic.empty(); }

    Idx face(int k, int i, Idx x) const { return faces[k][i][x]; }
    Idx degen(int k, int i, Idx x) const { return degens[k][i][x]; }
    Idx cyc(int k, Idx x) const { return cyclic[k][x]; }

    Idx cyc_pow(int k, Idx x, long long e) const {
        for (long long j = 0; j < e; ++j) x = cyclic[k][x];
        return x;
    }
};

inline std::string simplex_name(int k, Idx x) {
    return "(" + std::to_string(k) + "," + std::to_string(x) + ")";
}

/// Structural well-formedness; reported distinctly from identity violations.
inline ValidationReport schema_check(const SimplicialSet& X) {
    ValidationReport rep;
    const int N = X.trunc;
    if (N < 0 || static_cast<int>(X.counts.size()) != N + 1) {
        rep.add("schema: counts", -1, "", "counts size must be truncation+1");
        return rep;
    }
    auto check_table = [&](const std::vector<std::vector<Idx>>& rows, int k, int target_deg,
                           const char* what) {
        if (static_cast<int>(rows.size()) != k + 1) {
            rep.add(std::string("schema: ") + what, k, "", "expected k+1 operator rows");
            return;
        }
        for (int i = 0; i <= k; ++i) {
            if (rows[i].size() != X.counts[k]) {
                rep.add(std::string("schema: ") + what, k, "i=" + std::to_string(i),
                        "operator map is not total");
                continue;
            }
            for (Idx x = 0; x < X.counts[k]; ++x)
                if (rows[i][x] >= X.counts[target_deg]) {
                    rep.add(std::string("schema: ") + what, k, simplex_name(k, x),
                            "index out of range");
                    break;
                }
        }
    };
    if (static_cast<int>(X.faces.size()) != N + 1)
        rep.add("schema: faces", -1, "", "faces table size");
    else
        for (int k = 1; k <= N; ++k) check_table(X.faces[k], k, k - 1, "faces");
    if (static_cast<int>(X.degens.size()) < N)
        rep.add("schema: degeneracies", -1, "", "degeneracy table size");
    else
        for (int k = 0; k <= N - 1; ++k) check_table(X.degens[k], k, k + 1, "degeneracies");
    if (X.has_cyclic()) {
        if (static_cast<int>(X.cyclic.size()) != N + 1) {
            rep.add("schema: cyclic", -1, "", "cyclic table size");
        } else {
            for (int k = 0; k <= N; ++k) {
                if (X.cyclic[k].size() != X.counts[k]) {
                    rep.add("schema: cyclic", k, "", "cyclic map is not total");
                    continue;
                }
                std::vector<bool> seen(X.counts[k], false);
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    Idx y = X.cyclic[k][x];
                    if (y >= X.counts[k]) {
                        rep.add("schema: cyclic", k, simplex_name(k, x), "index out of range");
                        break;
                    }
                    if (seen[y]) rep.add("schema: cyclic", k, simplex_name(k, x), "not a bijection");
                    seen[y] = true;
                }
            }
        }
        if (X.cyclic_order_mult < 1) rep.add("schema: cyclic", -1, "", "order multiplier must be >= 1");
    }
    return rep;
}

namespace detail {

/// Eilenberg-Zilber sweep: every simplex must arise from exactly one pair
/// (nondegenerate simplex, strictly descending degeneracy word).
inline void ez_check(const SimplicialSet& X, ValidationReport& rep) {
    const int N = X.trunc;
    std::vector<std::vector<int>> hits(N + 1);
    for (int k = 0; k <= N; ++k) hits[k].assign(X.counts[k], 0);

    std::vector<std::vector<bool>> degenerate(N + 1);
    for (int k = 0; k <= N; ++k) degenerate[k].assign(X.counts[k], false);
    for (int k = 0; k <= N - 1; ++k)
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < X.counts[k]; ++x) degenerate[k + 1][X.degen(k, i, x)] = true;

    // grow words inside-out; the outermost index must strictly exceed the
    // previous one, which enumerates each canonical form exactly once
    struct Item {
        int deg;
        Idx x;
        int last;
    };
    std::vector<Item> stack;
    for (int k = 0; k <= N; ++k)
        for (Idx x = 0; x < X.counts[k]; ++x)
            if (!degenerate[k][x]) {
                hits[k][x] += 1;
                stack.push_back({k, x, -1});
            }
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.deg >= N) continue;
        for (int j = it.last + 1; j <= it.deg; ++j) {
            Idx y = X.degen(it.deg, j, it.x);
            hits[it.deg + 1][y] += 1;
            stack.push_back({it.deg + 1, y, j});
        }
    }
    for (int k = 0; k <= N; ++k)
        for (Idx x = 0; x < X.counts[k]; ++x)
            if (hits[k][x] != 1)
                rep.add("eilenberg-zilber factorization", k, simplex_name(k, x),
                        std::to_string(hits[k][x]) + " canonical presentations");
}

}  // namespace detail

/// Exhaustive check of the simplicial (and, when present, cyclic) identities
/// wherever both sides stay within the truncation.
inline ValidationReport validate(const SimplicialSet& X) {
    ValidationReport rep = schema_check(X);
    if (!rep.ok()) return rep;
    const int N = X.trunc;

    // d_i d_j = d_{j-1} d_i  (i < j)
    for (int k = 2; k <= N; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x)
                    if (X.face(k - 1, i, X.face(k, j, x)) != X.face(k - 1, j - 1, X.face(k, i, x)))
                        rep.add("d_i d_j = d_{j-1} d_i", k,
                                simplex_name(k, x), "i=" + std::to_string(i) + ",j=" + std::to_string(j));

    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (int k = 0; k + 2 <= N; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x)
                    if (X.degen(k + 1, i, X.degen(k, j, x)) != X.degen(k + 1, j + 1, X.degen(k, i, x)))
                        rep.add("s_i s_j = s_{j+1} s_i", k,
                                simplex_name(k, x), "i=" + std::to_string(i) + ",j=" + std::to_string(j));

    // d_i s_j mixed identities
    for (int k = 0; k + 1 <= N; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k + 1; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    Idx lhs = X.face(k + 1, i, X.degen(k, j, x));
                    Idx rhs;
                    const char* name;
                    if (i < j) {
                        rhs = X.degen(k - 1, j - 1, X.face(k, i, x));
                        name = "d_i s_j = s_{j-1} d_i";
                    } else if (i == j || i == j + 1) {
                        rhs = x;
                        name = "d_i s_j = id";
                    } else {
                        rhs = X.degen(k - 1, j, X.face(k, i - 1, x));
                        name = "d_i s_j = s_j d_{i-1}";
                    }
                    if (lhs != rhs)
                        rep.add(name, k, simplex_name(k, x),
                                "i=" + std::to_string(i) + ",j=" + std::to_string(j));
                }

    detail::ez_check(X, rep);

    if (X.has_cyclic()) {
        const long long mult = X.cyclic_order_mult;
        for (int k = 0; k <= N; ++k)
            for (Idx x = 0; x < X.counts[k]; ++x)
                if (X.cyc_pow(k, x, mult * (k + 1)) != x)
                    rep.add(mult == 1 ? "t_k^{k+1} = id" : "t_k^{r(k+1)} = id", k, simplex_name(k, x));

        for (int k = 1; k <= N; ++k)
            for (Idx x = 0; x < X.counts[k]; ++x) {
                Idx tx = X.cyc(k, x);
                if (X.face(k, 0, tx) != X.face(k, k, x))
                    rep.add("d_0 t_k = d_k", k, simplex_name(k, x));
                for (int i = 1; i <= k; ++i)
                    if (X.face(k, i, tx) != X.cyc(k - 1, X.face(k, i - 1, x)))
                        rep.add("d_i t_k = t_{k-1} d_{i-1}", k, simplex_name(k, x),
                                "i=" + std::to_string(i));
            }

        for (int k = 0; k + 1 <= N; ++k)
            for (Idx x = 0; x < X.counts[k]; ++x) {
                Idx tx = X.cyc(k, x);
                if (X.degen(k, 0, tx) != X.cyc_pow(k + 1, X.degen(k, k, x), 2))
                    rep.add("s_0 t_k = t_{k+1}^2 s_k", k, simplex_name(k, x));
                for (int i = 1; i <= k; ++i)
                    if (X.degen(k, i, tx) != X.cyc(k + 1, X.degen(k, i - 1, x)))
                        rep.add("s_i t_k = t_{k+1} s_{i-1}", k, simplex_name(k, x),
                                "i=" + std::to_string(i));
            }
    }
    return rep;
}

/// Simplices of degree k not in the image of any degeneracy.
inline std::vector<Idx> nondegenerate(const SimplicialSet& X, int k) {
    if (k < 0 || k > X.trunc) throw std::invalid_argument("nondegenerate: degree out of range");
    std::vector<bool> degen(X.counts[k], false);
    if (k >= 1)
        for (int i = 0; i <= k - 1; ++i)
            for (Idx x = 0; x < X.counts[k - 1]; ++x) degen[X.degen(k - 1, i, x)] = true;
    std::vector<Idx> out;
    for (Idx x = 0; x < X.counts[k]; ++x)
        if (!degen[x]) out.push_back(x);
    return out;
}

inline bool is_monotone(const std::vector<int>& f) {
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (f[i] > f[i + 1]) return false;
    return true;
}

/// Contravariant action X(f) for a weakly monotone f : [m] -> [n], computed
/// by peeling coface/codegeneracy generators.  f is given by its m+1 values.
inline std::pair<int, Idx> apply_monotone(const SimplicialSet& X, int n, Idx sigma,
                                          std::vector<int> f) {
    if (n < 0 || n > X.trunc) throw std::invalid_argument("apply_monotone: source degree out of range");
    if (f.empty()) throw std::invalid_argument("apply_monotone: empty map");
    if (!is_monotone(f)) throw std::invalid_argument("apply_monotone: map is not monotone");
    const int m = static_cast<int>(f.size()) - 1;
    if (m > X.trunc) throw std::invalid_argument("apply_monotone: target degree out of range");
    for (int v : f)
        if (v < 0 || v > n) throw std::invalid_argument("apply_monotone: value out of range");

    // apply the cofaces first (outermost in the epi-mono factorization),
    // then the codegeneracies; the intermediate degree never exceeds max(m,n)
    int deg = n;
    Idx x = sigma;
    std::vector<bool> in_image(n + 1, false);
    for (int v : f) in_image[v] = true;
    for (int i = n; i >= 0; --i)
        if (!in_image[i]) {
            // remaining missing indices are all < i, so only f needs renumbering
            x = X.face(deg, i, x);
            --deg;
            for (auto& v : f)
                if (v > i) --v;
        }
    // f is now surjective onto [deg]; X(g . sigma_j) = s_j . X(g)
    for (int j = 0; j + 1 < static_cast<int>(f.size()); ++j)
        if (f[j] == f[j + 1]) {
            f.erase(f.begin() + j);
            auto rec = apply_monotone(X, deg, x, f);
            return {rec.first + 1, X.degen(rec.first, j, rec.second)};
        }
    return {deg, x};
}

// ---------------------------------------------------------------------------
// builtin complexes
// ---------------------------------------------------------------------------

/// One simplex in every degree; cyclic with t = id.
inline SimplicialSet make_point(int N) {
    SimplicialSet X;
    X.trunc = N;
    X.counts.assign(N + 1, 1);
    X.faces.resize(N + 1);
    X.degens.resize(N + 1);
    X.cyclic.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (k >= 1) X.faces[k].assign(k + 1, std::vector<Idx>(1, 0));
        if (k <= N - 1) X.degens[k].assign(k + 1, std::vector<Idx>(1, 0));
        X.cyclic[k] = {0};
    }
    return X;
}

/// Standard cyclic circle Delta[1]/boundary: degree k holds the base point 0
/// and the classes 1..k (j encodes "j zeros then ones"); t_k is the
/// transitive rotation j -> j+1 mod (k+1).
inline SimplicialSet make_circle(int N) {
    SimplicialSet X;
    X.trunc = N;
    X.counts.resize(N + 1);
    for (int k = 0; k <= N; ++k) X.counts[k] = static_cast<Idx>(k + 1);
    X.faces.resize(N + 1);
    X.degens.resize(N + 1);
    X.cyclic.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (k >= 1) {
            X.faces[k].assign(k + 1, std::vector<Idx>(X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    if (x == 0) {
                        X.faces[k][i][x] = 0;
                    } else {
                        int z = static_cast<int>(x);
                        int z2 = (i < z) ? z - 1 : z;
                        X.faces[k][i][x] = (z2 == 0 || z2 == k) ? 0 : static_cast<Idx>(z2);
                    }
                }
        }
        if (k <= N - 1) {
            X.degens[k].assign(k + 1, std::vector<Idx>(X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x)
                    X.degens[k][i][x] = (x == 0) ? 0 : (i < static_cast<int>(x) ? x + 1 : x);
        }
        X.cyclic[k].resize(X.counts[k]);
        for (Idx x = 0; x < X.counts[k]; ++x)
            X.cyclic[k][x] = static_cast<Idx>((x + 1) % (k + 1));
    }
    return X;
}

/// Delta[2]/boundary: degree k holds the base point 0 and the surjections
/// [k] ->> [2], encoded by (a,b) with a,b >= 1, a+b <= k (a zeros, b ones).
inline SimplicialSet make_sphere2(int N) {
    SimplicialSet X;
    X.trunc = N;
    X.counts.resize(N + 1);
    // index (a,b) at degree k
    auto enumerate = [&](int k) {
        std::vector<std::pair<int, int>> cells;
        for (int a = 1; a <= k; ++a)
            for (int b = 1; a + b <= k; ++b) cells.push_back({a, b});
        return cells;
    };
    std::vector<std::vector<std::pair<int, int>>> cells(N + 1);
    std::vector<std::vector<std::vector<int>>> lookup(N + 1);
    for (int k = 0; k <= N; ++k) {
        cells[k] = enumerate(k);
        X.counts[k] = static_cast<Idx>(cells[k].size() + 1);
        lookup[k].assign(k + 2, std::vector<int>(k + 2, 0));
        for (std::size_t c = 0; c < cells[k].size(); ++c)
            lookup[k][cells[k][c].first][cells[k][c].second] = static_cast<int>(c) + 1;
    }
    auto classify = [&](int k, int a, int b) -> Idx {
        // a zeros, b ones among k+1 coordinates; 2s fill the rest
        if (a == 0 || b == 0 || a + b == k + 1) return 0;
        return static_cast<Idx>(lookup[k][a][b]);
    };
    X.faces.resize(N + 1);
    X.degens.resize(N + 1);
    for (int k = 0; k <= N; ++k) {
        if (k >= 1) {
            X.faces[k].assign(k + 1, std::vector<Idx>(X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    if (x == 0) {
                        X.faces[k][i][x] = 0;
                        continue;
                    }
                    auto [a, b] = cells[k][x - 1];
                    int a2 = a - (i < a ? 1 : 0);
                    int b2 = b - (i >= a && i < a + b ? 1 : 0);
                    X.faces[k][i][x] = classify(k - 1, a2, b2);
                }
        }
        if (k <= N - 1) {
            X.degens[k].assign(k + 1, std::vector<Idx>(X.counts[k]));
            for (int i = 0; i <= k; ++i)
                for (Idx x = 0; x < X.counts[k]; ++x) {
                    if (x == 0) {
                        X.degens[k][i][x] = 0;
                        continue;
                    }
                    auto [a, b] = cells[k][x - 1];
                    int a2 = a + (i < a ? 1 : 0);
                    int b2 = b + (i >= a && i < a + b ? 1 : 0);
                    X.degens[k][i][x] = classify(k + 1, a2, b2);
                }
        }
    }
    return X;
}

inline SimplicialSet make_builtin(const std::string& name, int N) {
    if (name == "point") return make_point(N);
    if (name == "circle") return make_circle(N);
    if (name == "sphere2") return make_sphere2(N);
    throw SchemaError("unknown builtin complex: " + name);
}

// ---------------------------------------------------------------------------
// level-preserving simplicial maps
// ---------------------------------------------------------------------------

struct SimplicialMap {
    std::vector<std::vector<Idx>> level;  // level[k] : X_k -> Y_k

    int top_degree() const { return static_cast<int>(level.size()) - 1; }
    Idx operator()(int k, Idx x) const { return level[k][x]; }
};

/// Commutation with faces/degeneracies (and t when `cyclic` is set) on all
/// degrees where both complexes are defined.
inline ValidationReport validate_map(const SimplicialSet& X, const SimplicialSet& Y,
                                     const SimplicialMap& f, bool cyclic = false) {
    ValidationReport rep;
    int top = std::min({f.top_degree(), X.trunc, Y.trunc});
    for (int k = 0; k <= top; ++k) {
        if (f.level[k].size() != X.counts[k]) {
            rep.add("schema: map", k, "", "map is not total");
            return rep;
        }
        for (Idx x = 0; x < X.counts[k]; ++x)
            if (f.level[k][x] >= Y.counts[k]) {
                rep.add("schema: map", k, simplex_name(k, x), "index out of range");
                return rep;
            }
    }
    for (int k = 1; k <= top; ++k)
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < X.counts[k]; ++x)
                if (f(k - 1, X.face(k, i, x)) != Y.face(k, i, f(k, x)))
                    rep.add("map d_i = d_i map", k, simplex_name(k, x), "i=" + std::to_string(i));
    for (int k = 0; k + 1 <= top; ++k)
        for (int i = 0; i <= k; ++i)
            for (Idx x = 0; x < X.counts[k]; ++x)
                if (f(k + 1, X.degen(k, i, x)) != Y.degen(k, i, f(k, x)))
                    rep.add("map s_i = s_i map", k, simplex_name(k, x), "i=" + std::to_string(i));
    if (cyclic) {
        if (!X.has_cyclic() || !Y.has_cyclic()) {
            rep.add("schema: map", -1, "", "cyclic map between non-cyclic complexes");
            return rep;
        }
        for (int k = 0; k <= top; ++k)
            for (Idx x = 0; x < X.counts[k]; ++x)
                if (f(k, X.cyc(k, x)) != Y.cyc(k, f(k, x)))
                    rep.add("map t_k = t_k map", k, simplex_name(k, x));
    }
    return rep;
}

}  // namespace cyctrace::simp
