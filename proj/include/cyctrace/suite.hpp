#pragma once

#include <atomic>
#include <chrono>
#include <thread>

#include "cubes.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "trace.hpp"
#include "witt_diagram.hpp"

namespace cyctrace::suite {

inline constexpr const char* kVersion = "cyctrace 1.0.0";

struct Bounds {
    int index_bound = 24;
    int groth_bound = 12;
    int witt_trials = 500;
    int diagram_trials = 100;
    int trace_trials = 200;
    int bar_degree = 4;
};

namespace detail {

inline std::uint64_t check_seed(const std::string& name, std::uint64_t master) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h ^ master;
}

inline void require(CheckResult& r, bool ok, const std::string& what) {
    r.notes.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
    if (!ok) r.pass = false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the named checks
// ---------------------------------------------------------------------------

/// Relations of the index category and unique F_r R_s factorization.
inline CheckResult check_index_relations(std::uint64_t, const Bounds& b) {
    CheckResult r{"indexcat.relations", true};
    const int B = b.index_bound;
    auto I = idx::build_index_category(B);
    detail::require(r, cat::validate_category(I.cat).ok(), "category laws at bound " + std::to_string(B));
    bool ids = true;
    for (int n = 1; n <= B; ++n)
        ids = ids && I.cat.identity[n - 1] == I.find(n, 1, 1);
    detail::require(r, ids, "F_1 = R_1 = id");
    bool ff = true, rr = true, fr = true;
    for (int n = 1; n <= B; ++n)
        for (int rv = 1; n * rv <= B; ++rv)
            for (int s = 1; n * rv * s <= B; ++s) {
                ff = ff && I.cat.compose(I.find(n * rv, rv, 1), I.find(n * rv * s, s, 1)) ==
                               I.find(n * rv * s, rv * s, 1);
                rr = rr && I.cat.compose(I.find(n * rv, 1, rv), I.find(n * rv * s, 1, s)) ==
                               I.find(n * rv * s, 1, rv * s);
                fr = fr && I.cat.compose(I.find(n * rv, rv, 1), I.find(n * rv * s, 1, s)) ==
                               I.cat.compose(I.find(n * s, 1, s), I.find(n * rv * s, rv, 1)) &&
                     I.cat.compose(I.find(n * rv, rv, 1), I.find(n * rv * s, 1, s)) ==
                         I.find(n * rv * s, rv, s);
            }
    detail::require(r, ff, "F_r F_s = F_rs on every composable pair");
    detail::require(r, rr, "R_r R_s = R_rs on every composable pair");
    detail::require(r, fr, "F_r R_s = R_s F_r on every composable pair");
    bool fact = true;
    for (std::size_t m = 0; m < I.data.size(); ++m) {
        auto [rv, s] = idx::factor_unique(I, static_cast<int>(m));
        const auto& d = I.data[m];
        fact = fact && I.cat.compose(I.find(d.n * rv, rv, 1), I.find(d.m, 1, s)) ==
                           static_cast<int>(m);
    }
    // counting: hom(m,n) is in bijection with the divisors of m/n
    for (int m = 1; m <= B && fact; ++m)
        for (int n = 1; n <= m; ++n) {
            if (m % n) continue;
            int count = 0;
            for (const auto& d : I.data)
                if (d.m == m && d.n == n) ++count;
            fact = fact && count == static_cast<int>(divisors_of(m / n).size());
        }
    detail::require(r, fact, "unique factorization as F_r R_s");
    return r;
}

/// N x| N" at bound 12 is the index category, via F_r <-> (r,1), R_s <-> (1,s).
inline CheckResult check_grothendieck(std::uint64_t, const Bounds& b) {
    CheckResult r{"indexcat.grothendieck", true};
    const int B = b.groth_bound;
    auto F = idx::make_nn_functor(B);
    detail::require(r, idx::validate_catfunctor(F).ok(), "functor laws of the N-action");
    auto G = idx::grothendieck_construct(F);
    detail::require(r, cat::validate_category(G.cat).ok(), "constructed category laws");
    bool total = true;
    for (int g = 0; g < G.cat.n_mor(); ++g)
        for (int f = 0; f < G.cat.n_mor(); ++f)
            if (G.cat.composable(g, f) && G.cat.compose(g, f) < 0) total = false;
    detail::require(r, total, "all composable composites defined");
    auto I = idx::build_index_category(B);
    cat::Functor D;
    D.ob.resize(I.cat.n_obj());
    for (int n = 1; n <= B; ++n) D.ob[n - 1] = G.obj(0, n - 1);
    D.mor.resize(I.cat.n_mor());
    bool built = true;
    for (std::size_t m = 0; m < I.data.size(); ++m) {
        const auto& d = I.data[m];
        int a = -1;  // the morphism m -> r*n in the divisibility fiber
        for (int f = 0; f < F.fiber[0].n_mor(); ++f)
            if (F.fiber[0].mors[f].src == d.m - 1 && F.fiber[0].mors[f].dst == d.r * d.n - 1) a = f;
        int gm = a < 0 ? -1 : G.mor(d.r - 1, a, G.obj(0, d.n - 1));
        if (gm < 0) built = false;
        D.mor[m] = gm;
    }
    detail::require(r, built, "dictionary F_r R_s -> (r, s) lands in the construction");
    auto verdict = cat::check_iso(I.cat, G.cat, D);
    detail::require(r, verdict.total_iso(), "dictionary is an isomorphism of categories" +
                                                (verdict.witness.empty() ? std::string()
                                                                         : " (" + verdict.witness + ")"));
    return r;
}

/// Lemma-2.4 mechanics: hypothesis and Theta for the divisibility instance
/// and three group actions; a collapsing action as the negative control.
inline CheckResult check_theta(std::uint64_t, const Bounds& b) {
    CheckResult r{"indexcat.theta", true};
    {
        auto rep = idx::check_theta_iso(idx::make_nn_functor(b.groth_bound));
        detail::require(r, rep.hypothesis_ok, "N-instance: hypothesis (bounded) holds");
        detail::require(r, rep.theta_functor_ok && rep.theta_iso,
                        "N-instance: Theta is an isomorphism (bounded)");
        detail::require(r, rep.implication_ok, "N-instance: hypothesis implies Theta iso");
    }
    struct ActionCase {
        const char* name;
        bar::Monoid G, H;
        std::vector<std::vector<int>> act;
    };
    std::vector<ActionCase> cases;
    {
        ActionCase c{"Z/2 on Z/3 by inversion", bar::cyclic_group(2), bar::cyclic_group(3), {}};
        c.act = {{0, 1, 2}, {0, 2, 1}};
        cases.push_back(c);
        ActionCase d{"Z/2 on Z/4 by inversion", bar::cyclic_group(2), bar::cyclic_group(4), {}};
        d.act = {{0, 1, 2, 3}, {0, 3, 2, 1}};
        cases.push_back(d);
        ActionCase e{"Z/3 on Z/7 by doubling", bar::cyclic_group(3), bar::cyclic_group(7), {}};
        e.act.resize(3, std::vector<int>(7));
        for (int g = 0; g < 3; ++g)
            for (int z = 0; z < 7; ++z) {
                int m = 1;
                for (int i = 0; i < g; ++i) m = (m * 2) % 7;
                e.act[g][z] = (z * m) % 7;
            }
        cases.push_back(e);
    }
    for (const auto& c : cases) {
        auto F = idx::make_action_functor(c.G, c.H, c.act);
        auto rep = idx::check_theta_iso(F);
        detail::require(r, rep.hypothesis_ok && rep.hypothesis_total,
                        std::string(c.name) + ": hypothesis holds");
        detail::require(r, rep.theta_functor_ok && rep.theta_iso && rep.theta_total,
                        std::string(c.name) + ": Theta is an isomorphism of categories");
        detail::require(r, rep.implication_ok, std::string(c.name) + ": implication");
    }
    {
        // the idempotent collapses (H down *) onto one object: hypothesis fails
        auto F = idx::make_action_functor(bar::idempotent2(), bar::cyclic_group(2),
                                          {{0, 1}, {0, 0}});
        auto rep = idx::check_theta_iso(F);
        detail::require(r, !rep.hypothesis_ok, "negative control: hypothesis fails");
        detail::require(r, !rep.hypothesis_witness.empty(),
                        "negative control reported a witness: " + rep.hypothesis_witness);
    }
    return r;
}

/// Witt ring axioms, ghost homomorphism, and the index diagram.
inline CheckResult check_witt_ring(std::uint64_t seed, const Bounds& b) {
    CheckResult r{"witt.ring", true};
    auto S = witt::divisor_trunc(12);
    auto run = [&](auto ring) {
        auto rep = witt::witt_law_suite(ring, S, b.witt_trials, detail::check_seed(ring.tag(), seed));
        std::string what = ring.tag() + ": ring axioms + ghost homomorphism (" +
                           std::to_string(rep.trials) + " triples)";
        detail::require(r, rep.all_pass(), rep.all_pass() ? what : what + " " + rep.witnesses.front());
    };
    run(rings::ZRing{});
    run(rings::ZmodRing(2));
    run(rings::ZmodRing(4));
    run(rings::ZmodRing(5));
    run(rings::ZmodRing(6));
    {
        auto rep = witt::check_index_diagram(rings::ZmodRing(4), 12, b.diagram_trials, seed ^ 0xd1a6);
        detail::require(r, rep.all_pass(),
                        "index diagram over z:4, bound 12 (" + std::to_string(rep.instances) +
                            " instances)" +
                            (rep.witnesses.empty() ? "" : " " + rep.witnesses.front()));
    }
    {
        auto rep = witt::check_index_diagram(rings::ZRing{}, 12, b.diagram_trials / 2, seed ^ 0xd1a7);
        detail::require(r, rep.all_pass(), "index diagram over z:0, bound 12");
    }
    return r;
}

/// The characteristic-trace laws and the worked Frobenius chain.
inline CheckResult check_trace_laws(std::uint64_t seed, const Bounds& b) {
    CheckResult r{"trace.laws", true};
    {
        rings::ZRing Z;
        tr::TraceSuiteConfig cfg;
        cfg.trials = b.trace_trials;
        cfg.seed = detail::check_seed("z:0", seed);
        auto rep = tr::trace_property_suite(Z, cfg);
        detail::require(r, rep.all_pass(),
                        "laws (a)-(e) over z:0, " + std::to_string(rep.trials) + " matrices" +
                            (rep.witnesses.empty() ? "" : " " + rep.witnesses.front()));
    }
    {
        rings::ZmodRing Z5(5);
        tr::TraceSuiteConfig cfg;
        cfg.lo = 0;
        cfg.hi = 4;
        cfg.trials = b.trace_trials;
        cfg.seed = detail::check_seed("z:5", seed);
        auto rep = tr::trace_property_suite(Z5, cfg);
        detail::require(r, rep.all_pass(),
                        "laws (a)-(e) over z:5, " + std::to_string(rep.trials) + " matrices" +
                            (rep.witnesses.empty() ? "" : " " + rep.witnesses.front()));
    }
    {
        rings::ZRing Z;
        tr::Mat<rings::ZRing> swap(Z, 2);
        swap.at(0, 1) = 1;
        swap.at(1, 0) = 1;
        auto x = tr::trc0(Z, swap, witt::divisor_trunc(4));
        auto expect = witt::witt_zero(Z, witt::divisor_trunc(4));
        expect.a[1] = 1;  // (0,1,0)
        bool chain = witt::witt_eq(Z, x, expect);
        auto fx = witt::frobenius_witt(Z, x, 2);
        auto expect2 = witt::witt_zero(Z, witt::divisor_trunc(2));
        expect2.a[0] = 2;
        expect2.a[1] = -1;  // (2,-1)
        chain = chain && witt::witt_eq(Z, fx, expect2);
        chain = chain && witt::witt_eq(Z, fx, tr::trc0(Z, tr::mat_identity(Z, 2),
                                                       witt::divisor_trunc(2)));
        detail::require(r, chain, "worked chain: trc0(swap) = (0,1,0), F_2 -> (2,-1) = trc0(I_2)");
    }
    return r;
}

/// Subdivision invariance: validation, homology, iterated-subdivision
/// functoriality for the four standard complexes.
inline CheckResult check_subdivision(std::uint64_t, const Bounds&) {
    CheckResult r{"subdivision.invariance", true};
    struct Case {
        std::string name;
        simp::SimplicialSet X;
    };
    std::vector<Case> cases;
    cases.push_back({"circle[11]", simp::make_circle(11)});
    cases.push_back({"sphere2[9]", simp::make_sphere2(9)});
    cases.push_back({"barZ2[9]", bar::cyclic_bar(bar::monoid_category(bar::cyclic_group(2)), 9).X});
    cases.push_back({"barZ3[5]", bar::cyclic_bar(bar::monoid_category(bar::cyclic_group(3)), 5).X});
    for (const auto& c : cases) {
        detail::require(r, simp::validate(c.X).ok(), c.name + ": base validation");
        auto chainsX = hom::normalized_chains(c.X);
        for (int rv : {2, 3}) {
            auto S = subdiv::edgewise_subdivide(c.X, rv);
            detail::require(r, subdiv::validate_subdivided(S).ok(),
                            c.name + ": sd_" + std::to_string(rv) + " full validation");
            auto Fx = subdiv::fixed_subcomplex(S);
            detail::require(r, Fx.closure.ok() && simp::validate(Fx.complex).ok(),
                            c.name + ": sd_" + std::to_string(rv) +
                                " fixed subcomplex closed and (cyclic) valid");
            detail::require(r,
                            simp::validate_map(Fx.complex, S.result, Fx.inclusion,
                                               c.X.has_cyclic())
                                .ok(),
                            c.name + ": fixed-point inclusion is a (cyclic) simplicial map");
            bool homol = true;
            auto chainsS = hom::normalized_chains(S.result);
            for (int k = 0; k <= S.result.trunc - 1; ++k)
                homol = homol && hom::homology(S.result, k, &chainsS) ==
                                     hom::homology(c.X, k, &chainsX);
            detail::require(r, homol,
                            c.name + ": homology of sd_" + std::to_string(rv) +
                                " matches through degree " + std::to_string(S.result.trunc - 1));
        }
        for (auto [rv, sv] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
            if (c.X.trunc < rv * sv - 1) continue;
            auto AB = subdiv::edgewise_subdivide(subdiv::edgewise_subdivide(c.X, sv).result, rv);
            auto C2 = subdiv::edgewise_subdivide(c.X, rv * sv);
            bool same = AB.result.trunc == C2.result.trunc &&
                        AB.result.counts == C2.result.counts &&
                        AB.result.faces == C2.result.faces &&
                        AB.result.degens == C2.result.degens &&
                        AB.result.cyclic == C2.result.cyclic && AB.cr == C2.cr;
            detail::require(r, same,
                            c.name + ": sd_" + std::to_string(rv) + " sd_" + std::to_string(sv) +
                                " = sd_" + std::to_string(rv * sv) + " degreewise");
        }
    }
    return r;
}

/// Bar operators: diagonal/restriction, Frobenius composition, projection
/// equivariance, degree-0 power law.
inline CheckResult check_bar_operators(std::uint64_t, const Bounds& b) {
    CheckResult r{"barcat.operators", true};
    struct Case {
        std::string name;
        bar::Monoid M;
        int N;
    };
    std::vector<Case> cases = {{"Z/2", bar::cyclic_group(2), 7},
                               {"Z/3", bar::cyclic_group(3), 5},
                               {"Z/4", bar::cyclic_group(4), 5},
                               {"S3", bar::symmetric_s3(), 5},
                               {"idem2", bar::idempotent2(), 7}};
    const int topdeg = b.bar_degree;
    for (const auto& c : cases) {
        auto C = bar::monoid_category(c.M);
        auto B = bar::cyclic_bar(C, c.N);
        detail::require(r, simp::validate(B.X).ok(), c.name + ": cyclic bar validates");
        auto Nv = bar::nerve(C, std::min(c.N, topdeg));
        detail::require(r, simp::validate(Nv.X).ok(), c.name + ": nerve validates");

        // materialized diagonal/restriction for r = 2, 3
        for (int rv : {2, 3}) {
            auto D = bar::diagonal_restriction(C, B, rv);
            bool ok = D.fixed.closure.ok() && simp::validate(D.fixed.complex).ok();
            ok = ok && simp::validate_map(B.X, D.fixed.complex, D.delta, true).ok();
            ok = ok && simp::validate_map(D.fixed.complex, B.X, D.restrict, true).ok();
            for (int k = 0; k <= D.fixed.complex.trunc && ok; ++k) {
                for (simp::Idx x = 0; x < B.X.counts[k] && ok; ++x)
                    ok = D.restrict.level[k][D.delta.level[k][x]] == x;
                for (simp::Idx z = 0; z < D.fixed.complex.counts[k] && ok; ++z)
                    ok = D.delta.level[k][D.restrict.level[k][z]] == z;
            }
            detail::require(r, ok,
                            c.name + ": Delta_" + std::to_string(rv) + "/R_" + std::to_string(rv) +
                                " mutually inverse cyclic isos onto the fixed points");
            // onto-ness concretely: every C_r-fixed ambient simplex is a block repetition
            bool onto = true;
            for (int k = 0; k <= D.sd.result.trunc; ++k) {
                const int big = rv * (k + 1) - 1;
                for (simp::Idx x = 0; x < B.X.counts[big]; ++x) {
                    const auto& t = B.tuples[big][x];
                    bool fixed = D.sd.cr[k][x] == x;
                    bool rep = bar::bar_delta(bar::bar_restrict(t, rv), rv) == t;
                    if (fixed != rep) onto = false;
                }
            }
            detail::require(r, onto,
                            c.name + ": C_" + std::to_string(rv) +
                                "-fixed simplices are exactly the block repetitions");
        }

        // tuple-level laws through degree `topdeg`
        bool block_rot = true, delta_laws = true, fbar_comp = true, fbar_proj = true,
             power0 = true, fbar_id = true;
        for (int k = 0; k <= topdeg; ++k) {
            auto tuples = bar::enumerate_bar_tuples(C, k);
            for (const auto& t : tuples) {
                for (int rv = 1; rv <= 4; ++rv) {
                    auto u = bar::bar_delta(t, rv);
                    // ambient t^{k+1} acts by block rotation
                    auto rot = bar::bar_cyc_pow(u, k + 1);
                    bar::Tuple direct(u.end() - (k + 1), u.end());
                    direct.insert(direct.end(), u.begin(), u.end() - (k + 1));
                    block_rot = block_rot && rot == direct;
                    delta_laws = delta_laws && rot == u;  // diagonal lands in fixed points
                    delta_laws = delta_laws && bar::bar_restrict(u, rv) == t;
                    delta_laws = delta_laws &&
                                 bar::bar_delta(bar::bar_cyc(t), rv) == bar::bar_cyc(u);
                }
                fbar_id = fbar_id && bar::bar_frobenius(C, t, 1) == t;
                for (int rv = 1; rv <= 3; ++rv) {
                    for (int sv = 1; sv <= 3; ++sv)
                        fbar_comp = fbar_comp &&
                                    bar::bar_frobenius(C, bar::bar_frobenius(C, t, sv), rv) ==
                                        bar::bar_frobenius(C, t, rv * sv);
                    if (k >= 1)
                        fbar_proj = fbar_proj && bar::bar_project(bar::bar_frobenius(C, t, rv)) ==
                                                     bar::bar_project(t);
                }
            }
        }
        for (int g = 0; g < c.M.size(); ++g)
            for (int rv = 1; rv <= 4; ++rv) {
                int p = c.M.unit;
                for (int i = 0; i < rv; ++i) p = c.M.mul(p, g);
                power0 = power0 && bar::bar_frobenius(C, {g}, rv) == bar::Tuple{p};
            }
        detail::require(r, block_rot, c.name + ": t^(k+1) is block rotation on repetitions");
        detail::require(r, delta_laws, c.name + ": Delta_r laws through degree " +
                                           std::to_string(topdeg) + ", r <= 4");
        detail::require(r, fbar_id, c.name + ": Fbar_1 = id");
        detail::require(r, fbar_comp, c.name + ": Fbar_r Fbar_s = Fbar_rs, r,s <= 3");
        detail::require(r, fbar_proj, c.name + ": projection absorbs Fbar_r");
        detail::require(r, power0, c.name + ": Fbar_r is the r-th power in degree 0");

        // materialized Frobenius and projection
        for (int rv : {2, 3}) {
            auto F = bar::frobenius_bar(C, B, rv);
            detail::require(r, simp::validate_map(B.X, B.X, F).ok(),
                            c.name + ": materialized Fbar_" + std::to_string(rv) +
                                " is a simplicial map");
        }
        auto P = bar::project_to_nerve(C, B, Nv);
        detail::require(r, simp::validate_map(B.X, Nv.X, P).ok(),
                        c.name + ": projection is a simplicial map");
        for (int rv : {2, 3}) {
            auto F = bar::frobenius_bar(C, B, rv);
            bool eq = true;
            int top = std::min(F.top_degree(), P.top_degree());
            for (int k = 0; k <= top; ++k)
                for (simp::Idx x = 0; x < B.X.counts[k]; ++x)
                    eq = eq && P.level[k][F.level[k][x]] == P.level[k][x];
            detail::require(r, eq, c.name + ": project . Fbar_" + std::to_string(rv) + " = project");
        }
    }
    return r;
}

/// H_0 of the cyclic bar of S_3 vs the conjugacy-class count.
inline CheckResult check_conjugacy(std::uint64_t, const Bounds&) {
    CheckResult r{"homology.conjugacy", true};
    auto M = bar::symmetric_s3();
    auto B = bar::cyclic_bar(bar::monoid_category(M), 2);
    auto H0 = hom::homology(B.X, 0);
    long long comps = hom::skeleton_components(B.X);
    int classes = bar::conjugacy_class_count(M);
    detail::require(r, H0.betti == 3 && H0.torsion.empty(),
                    "H_0(Bcy(S3)) = Z^3, computed " + H0.str());
    detail::require(r, comps == 3, "union-find on the 1-skeleton gives 3 components");
    detail::require(r, classes == 3, "S3 has 3 conjugacy classes from the table");
    detail::require(r, H0.betti == comps && comps == classes, "all three routes agree");
    return r;
}

/// Coherence-cube face relations for all U within {2,3,5}.
inline CheckResult check_cubes(std::uint64_t, const Bounds&) {
    CheckResult r{"coherence.cubes", true};
    std::vector<int> primes = {2, 3, 5};
    for (int mask = 0; mask < 8; ++mask) {
        std::set<int> U;
        for (int i = 0; i < 3; ++i)
            if (mask & (1 << i)) U.insert(primes[i]);
        auto rep = cube::verify_cube_face_relations(U);
        detail::require(r, rep.all_pass(),
                        "face relations for U = " + cube::set_str(U) + " (" +
                            std::to_string(rep.entries.size()) + " faces)");
    }
    auto h = cube::expand_h({2, 3});
    bool display = h.terms.size() == 4;
    for (const auto& t : h.terms) {
        if (t.upper.empty()) display = display && t.d == 6 && t.dbar == 1;
        if (t.upper == std::set<int>{2}) display = display && t.d == 3 && t.dbar == 2;
        if (t.upper == std::set<int>{3}) display = display && t.d == 2 && t.dbar == 3;
        if (t.upper == std::set<int>{2, 3}) display = display && t.d == 1 && t.dbar == 6;
    }
    detail::require(r, display, "h^{p,q} expands to the four displayed terms");
    return r;
}

// ---------------------------------------------------------------------------
// registry and runner
// ---------------------------------------------------------------------------

using CheckFn = CheckResult (*)(std::uint64_t, const Bounds&);

inline const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"indexcat.relations", check_index_relations},
        {"indexcat.grothendieck", check_grothendieck},
        {"indexcat.theta", check_theta},
        {"witt.ring", check_witt_ring},
        {"trace.laws", check_trace_laws},
        {"subdivision.invariance", check_subdivision},
        {"barcat.operators", check_bar_operators},
        {"homology.conjugacy", check_conjugacy},
        {"coherence.cubes", check_cubes},
    };
    return r;
}

inline std::vector<std::string> all_check_names(bool with_determinism = true) {
    std::vector<std::string> names;
    for (const auto& [n, fn] : registry()) names.push_back(n);
    if (with_determinism) names.push_back("suite.determinism");
    return names;
}

inline SuiteReport run_suite(const std::vector<std::string>& names, std::uint64_t seed,
                             const Bounds& bounds, int jobs = 1);

/// Rerun every registered check twice with the same seed; verdicts and
/// witnesses must agree bit-for-bit (timings excluded).
inline CheckResult check_determinism(std::uint64_t seed, const Bounds& bounds) {
    CheckResult r{"suite.determinism", true};
    std::vector<std::string> names;
    for (const auto& [n, fn] : registry()) names.push_back(n);
    auto a = run_suite(names, seed, bounds, 1);
    auto b = run_suite(names, seed, bounds, 1);
    bool same = io::reports_equivalent(io::report_to_json(a), io::report_to_json(b));
    detail::require(r, same, "two runs with seed " + std::to_string(seed) +
                                 " agree verdict-for-verdict");
    return r;
}

inline CheckResult run_one(const std::string& name, std::uint64_t seed, const Bounds& bounds) {
    CheckFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name) fn = f;
    const bool determinism = name == "suite.determinism";
    if (!fn && !determinism) throw std::invalid_argument("unknown check: " + name);
    auto start = std::chrono::steady_clock::now();
    std::uint64_t s = detail::check_seed(name, seed);
    CheckResult res;
    try {
        res = determinism ? check_determinism(seed, bounds) : fn(s, bounds);
    } catch (const std::exception& e) {
        res.name = name;
        res.pass = false;
        res.notes.push_back(std::string("exception: ") + e.what());
    }
    res.seed = s;
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    return res;
}

inline SuiteReport run_suite(const std::vector<std::string>& names, std::uint64_t seed,
                             const Bounds& bounds, int jobs) {
    SuiteReport rep;
    rep.version = kVersion;
    rep.seed = seed;
    rep.checks.resize(names.size());
    for (const auto& n : names) {  // reject unknown names before any work runs
        bool known = n == "suite.determinism";
        for (const auto& [rn, fn] : registry()) known = known || rn == n;
        if (!known) throw std::invalid_argument("unknown check: " + n);
    }
    if (jobs <= 1 || names.size() <= 1) {
        for (std::size_t i = 0; i < names.size(); ++i) rep.checks[i] = run_one(names[i], seed, bounds);
        return rep;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= names.size()) return;
            rep.checks[i] = run_one(names[i], seed, bounds);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(jobs, static_cast<int>(names.size())); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return rep;
}

inline std::string report_text(const SuiteReport& rep) {
    std::string out = std::string(kVersion) + ", seed " + std::to_string(rep.seed) + "\n";
    for (const auto& c : rep.checks) {
        out += (c.pass ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.ms) + " ms)\n";
        for (const auto& n : c.notes)
            if (!c.pass || n.rfind("FAIL", 0) == 0) out += "    " + n + "\n";
    }
    out += rep.all_pass() ? "all checks passed\n" : "some checks FAILED\n";
    return out;
}

}  // namespace cyctrace::suite
