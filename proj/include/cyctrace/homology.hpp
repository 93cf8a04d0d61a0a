#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rings.hpp"
#include "simplicial.hpp"

namespace cyctrace::hom {

using rings::Int;
using simp::Idx;
using simp::SimplicialSet;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Int(0)) {}
    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Invariant factors d_1 | d_2 | ... of an integer matrix, each positive;
/// the zero matrix has none.  Arbitrary-precision throughout: intermediate
/// entries grow well beyond 64 bits even on small inputs.
inline std::vector<Int> smith_normal_form(IntMat M) {
    std::vector<Int> factors;
    int t = 0;
    while (t < M.rows && t < M.cols) {
        // smallest nonzero entry of the trailing submatrix as pivot
        int pr = -1, pc = -1;
        for (int r = t; r < M.rows; ++r)
            for (int c = t; c < M.cols; ++c)
                if (M.at(r, c) != 0 &&
                    (pr < 0 || abs(M.at(r, c)) < abs(M.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        if (pr != t)
            for (int c = t; c < M.cols; ++c) std::swap(M.at(t, c), M.at(pr, c));
        if (pc != t)
            for (int r = t; r < M.rows; ++r) std::swap(M.at(r, t), M.at(r, pc));

        bool restart = false;
        for (int r = t + 1; r < M.rows && !restart; ++r)
            if (M.at(r, t) != 0) {
                Int q = M.at(r, t) / M.at(t, t);
                for (int c = t; c < M.cols; ++c) M.at(r, c) -= q * M.at(t, c);
                if (M.at(r, t) != 0) restart = true;  // remainder is a smaller pivot
            }
        if (restart) continue;
        for (int c = t + 1; c < M.cols && !restart; ++c)
            if (M.at(t, c) != 0) {
                Int q = M.at(t, c) / M.at(t, t);
                for (int r = t; r < M.rows; ++r) M.at(r, c) -= q * M.at(r, t);
                if (M.at(t, c) != 0) restart = true;
            }
        if (restart) continue;
        for (int r = t + 1; r < M.rows && !restart; ++r)
            for (int c = t + 1; c < M.cols && !restart; ++c)
                if (M.at(r, c) % M.at(t, t) != 0) {
                    for (int cc = t; cc < M.cols; ++cc) M.at(t, cc) += M.at(r, cc);
                    restart = true;
                }
        if (restart) continue;
        factors.push_back(abs(M.at(t, t)));
        ++t;
    }
    return factors;
}

inline int rank_of(const IntMat& M) {
    return static_cast<int>(smith_normal_form(M).size());
}

/// Normalized chain complex: one generator per nondegenerate simplex, faces
/// projected to the nondegenerate basis.
struct ChainComplex {
    int top = 0;
    std::vector<std::vector<Idx>> basis;  // nondegenerate simplices per degree
    std::vector<IntMat> boundary;         // boundary[k] : C_k -> C_{k-1}, k >= 1
};

inline ChainComplex normalized_chains(const SimplicialSet& X) {
    ChainComplex C;
    C.top = X.trunc;
    C.basis.resize(C.top + 1);
    std::vector<std::vector<int>> pos(C.top + 1);
    for (int k = 0; k <= C.top; ++k) {
        C.basis[k] = simp::nondegenerate(X, k);
        pos[k].assign(X.counts[k], -1);
        for (std::size_t i = 0; i < C.basis[k].size(); ++i)
            pos[k][C.basis[k][i]] = static_cast<int>(i);
    }
    C.boundary.resize(C.top + 1);
    for (int k = 1; k <= C.top; ++k) {
        IntMat B(static_cast<int>(C.basis[k - 1].size()), static_cast<int>(C.basis[k].size()));
        for (int c = 0; c < B.cols; ++c) {
            Idx sigma = C.basis[k][c];
            for (int i = 0; i <= k; ++i) {
                int r = pos[k - 1][X.face(k, i, sigma)];
                if (r >= 0) B.at(r, c) += (i % 2 == 0) ? 1 : -1;
            }
        }
        C.boundary[k] = std::move(B);
    }
    // d^2 = 0 is a hard failure: the complex is unusable if it fails
    for (int k = 2; k <= C.top; ++k) {
        const IntMat& A = C.boundary[k - 1];
        const IntMat& B = C.boundary[k];
        for (int r = 0; r < A.rows; ++r)
            for (int c = 0; c < B.cols; ++c) {
                Int s = 0;
                for (int m = 0; m < B.rows; ++m) s += A.at(r, m) * B.at(m, c);
                if (s != 0)
                    throw std::logic_error("normalized_chains: boundary^2 != 0 at degree " +
                                           std::to_string(k));
            }
    }
    return C;
}

struct HomologyGroup {
    long long betti = 0;
    std::vector<Int> torsion;

    bool operator==(const HomologyGroup& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    std::string str() const {
        std::string s = "betti=" + std::to_string(betti) + " torsion=[";
        for (std::size_t i = 0; i < torsion.size(); ++i)
            s += (i ? "," : "") + torsion[i].str();
        return s + "]";
    }
};

/// Integral H_k of the truncated complex; k = truncation degree is refused
/// because the kernel there is an artifact of the cut.
inline HomologyGroup homology(const SimplicialSet& X, int k, const ChainComplex* pre = nullptr) {
    if (k < 0 || k > X.trunc - 1)
        throw std::invalid_argument("homology: degree must satisfy 0 <= k <= truncation-1");
    ChainComplex local;
    const ChainComplex& C = pre ? *pre : (local = normalized_chains(X));
    const long long nk = static_cast<long long>(C.basis[k].size());
    const int rank_in = (k >= 1) ? rank_of(C.boundary[k]) : 0;
    auto factors_out = smith_normal_form(C.boundary[k + 1]);
    HomologyGroup H;
    H.betti = nk - rank_in - static_cast<long long>(factors_out.size());
    for (const auto& d : factors_out)
        if (d > 1) H.torsion.push_back(d);
    return H;
}

/// Connected components of the 1-skeleton (an independent route to betti_0).
inline long long skeleton_components(const SimplicialSet& X) {
    const Idx n0 = X.counts[0];
    std::vector<Idx> parent(n0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Idx v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    if (X.trunc >= 1)
        for (Idx e = 0; e < X.counts[1]; ++e) {
            Idx a = find(X.face(1, 0, e)), b = find(X.face(1, 1, e));
            if (a != b) parent[a] = b;
        }
    long long comps = 0;
    for (Idx v = 0; v < n0; ++v)
        if (find(v) == v) ++comps;
    return comps;
}

}  // namespace cyctrace::hom
