#pragma once

#include <string>
#include <vector>

#include "indexcat.hpp"
#include "witt.hpp"

namespace cyctrace::witt {

/// n |-> W_<n>(ring) as a diagram on the truncated index category: a
/// morphism F_r R_s : m -> n acts by restriction to <rn> followed by the
/// Frobenius F_r.  The report covers identity action, functoriality on
/// randomized vectors, the value-level generator pins (F_r = frobenius_witt,
/// R_s = restriction), the commutation F_r R_s = R_s F_r, and the ghost
/// dilation law of the Frobenius.
struct DiagramReport {
    bool identities = true;
    bool functorial = true;
    bool generator_pins = true;
    bool commutation = true;
    bool ghost_dilation = true;
    int instances = 0;
    std::vector<std::string> witnesses;

    bool all_pass() const {
        return identities && functorial && generator_pins && commutation && ghost_dilation;
    }
};

/// Deliberate mis-wirings for negative controls.
enum class DiagramCorruption { None, SwapFrobeniusRestriction, DropFrobenius };

template <class R>
WittVec<R> index_action(const R& ring, const idx::IndexCategory& I, int mor, const WittVec<R>& x,
                        DiagramCorruption corrupt = DiagramCorruption::None) {
    const auto& d = I.data[mor];
    switch (corrupt) {
        case DiagramCorruption::SwapFrobeniusRestriction: {
            auto y = restrict_witt(ring, x, divisor_trunc(d.n * d.s));
            return frobenius_witt(ring, y, d.s);
        }
        case DiagramCorruption::DropFrobenius:
            return restrict_witt(ring, x, divisor_trunc(d.n));
        case DiagramCorruption::None:
        default: {
            auto y = restrict_witt(ring, x, divisor_trunc(d.r * d.n));
            return frobenius_witt(ring, y, d.r);
        }
    }
}

template <class R>
DiagramReport check_index_diagram(const R& ring, int B, int trials, std::uint64_t seed,
                                  DiagramCorruption corrupt = DiagramCorruption::None) {
    DiagramReport rep;
    idx::IndexCategory I = idx::build_index_category(B);
    Rng master(seed);
    auto note = [&](bool DiagramReport::* law, const std::string& msg) {
        rep.*law = false;
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(msg);
    };
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = master.fork(trial);
        // identity action
        {
            int n = static_cast<int>(rng.range(1, B));
            auto x = random_witt(ring, divisor_trunc(n), rng);
            auto y = index_action(ring, I, I.find(n, 1, 1), x, corrupt);
            ++rep.instances;
            if (!witt_eq(ring, x, y)) note(&DiagramReport::identities, "identity acts nontrivially");
        }
        // functoriality on a random composable pair
        {
            int g = static_cast<int>(rng.below(I.data.size()));
            std::vector<int> candidates;
            for (std::size_t f = 0; f < I.data.size(); ++f)
                if (I.data[f].n == I.data[g].m) candidates.push_back(static_cast<int>(f));
            int f = candidates[rng.below(candidates.size())];
            int gf = I.cat.compose(g, f);
            auto x = random_witt(ring, divisor_trunc(I.data[f].m), rng);
            auto two = index_action(ring, I, g, index_action(ring, I, f, x, corrupt), corrupt);
            auto one = index_action(ring, I, gf, x, corrupt);
            ++rep.instances;
            if (!witt_eq(ring, one, two))
                note(&DiagramReport::functorial,
                     "W(g.f) != W(g)W(f) at " + I.cat.mors[g].name + " . " + I.cat.mors[f].name);
        }
    }
    // value-level pins and commutation, exhaustively over the morphisms
    for (std::size_t mor = 0; mor < I.data.size(); ++mor) {
        const auto& d = I.data[mor];
        Rng rng = master.fork(1000003ULL + mor);
        auto x = random_witt(ring, divisor_trunc(d.m), rng);
        ++rep.instances;
        if (d.s == 1) {
            auto via_action = index_action(ring, I, static_cast<int>(mor), x, corrupt);
            auto direct = frobenius_witt(ring, x, d.r);
            if (!witt_eq(ring, via_action, direct))
                note(&DiagramReport::generator_pins,
                     I.cat.mors[mor].name + " does not act as the Frobenius");
        }
        if (d.r == 1) {
            auto via_action = index_action(ring, I, static_cast<int>(mor), x, corrupt);
            auto direct = restrict_witt(ring, x, divisor_trunc(d.n));
            if (!witt_eq(ring, via_action, direct))
                note(&DiagramReport::generator_pins,
                     I.cat.mors[mor].name + " does not act as the restriction");
        }
        // F_r R_s = R_s F_r: restrict-then-frobenius vs frobenius-then-restrict
        {
            auto route1 = frobenius_witt(ring, restrict_witt(ring, x, divisor_trunc(d.r * d.n)), d.r);
            auto route2 = restrict_witt(ring, frobenius_witt(ring, x, d.r), divisor_trunc(d.n));
            if (!witt_eq(ring, route1, route2))
                note(&DiagramReport::commutation, "F_r R_s != R_s F_r at " + I.cat.mors[mor].name);
        }
        // ghost(F_r x)_n = ghost(x)_{rn}
        {
            auto Fx = frobenius_witt(ring, x, d.r);
            auto wF = ghost(ring, Fx);
            auto w = ghost(ring, x);
            for (int i = 0; i < Fx.S.size(); ++i) {
                int n = Fx.S.elems[i];
                int pos = x.S.position(d.r * n);
                if (pos < 0 || !ring.equal(wF[i], w[pos]))
                    note(&DiagramReport::ghost_dilation,
                         "ghost dilation fails at r=" + std::to_string(d.r) +
                             ", n=" + std::to_string(n));
            }
        }
    }
    return rep;
}

/// Ring axioms and ghost homomorphism on randomized vectors.
struct WittLawReport {
    bool add_group = true;       // associativity, commutativity, zero, negation
    bool mul_monoid = true;      // associativity, commutativity, unit
    bool distributive = true;
    bool ghost_hom = true;       // ghost(x+y) = ghost x + ghost y, same for *
    int trials = 0;
    std::vector<std::string> witnesses;

    bool all_pass() const { return add_group && mul_monoid && distributive && ghost_hom; }
};

template <class R>
WittLawReport witt_law_suite(const R& ring, const TruncationSet& S, int trials,
                             std::uint64_t seed) {
    WittLawReport rep;
    Rng master(seed);
    auto note = [&](bool WittLawReport::* law, const std::string& msg) {
        rep.*law = false;
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(msg);
    };
    const auto zero = witt_zero(ring, S);
    const auto unit = teichmuller(ring, S, ring.one());
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = master.fork(trial);
        auto x = random_witt(ring, S, rng);
        auto y = random_witt(ring, S, rng);
        auto z = random_witt(ring, S, rng);
        ++rep.trials;
        const std::string at = "trial " + std::to_string(trial);
        if (!witt_eq(ring, witt_add(ring, witt_add(ring, x, y), z),
                     witt_add(ring, x, witt_add(ring, y, z))))
            note(&WittLawReport::add_group, at + ": add associativity");
        if (!witt_eq(ring, witt_add(ring, x, y), witt_add(ring, y, x)))
            note(&WittLawReport::add_group, at + ": add commutativity");
        if (!witt_eq(ring, witt_add(ring, x, zero), x))
            note(&WittLawReport::add_group, at + ": additive zero");
        if (!witt_eq(ring, witt_add(ring, x, witt_neg(ring, x)), zero))
            note(&WittLawReport::add_group, at + ": negation");
        if (!witt_eq(ring, witt_mul(ring, witt_mul(ring, x, y), z),
                     witt_mul(ring, x, witt_mul(ring, y, z))))
            note(&WittLawReport::mul_monoid, at + ": mul associativity");
        if (!witt_eq(ring, witt_mul(ring, x, y), witt_mul(ring, y, x)))
            note(&WittLawReport::mul_monoid, at + ": mul commutativity");
        if (!witt_eq(ring, witt_mul(ring, x, unit), x))
            note(&WittLawReport::mul_monoid, at + ": teichmuller(1) is not the unit");
        if (!witt_eq(ring, witt_mul(ring, x, witt_add(ring, y, z)),
                     witt_add(ring, witt_mul(ring, x, y), witt_mul(ring, x, z))))
            note(&WittLawReport::distributive, at + ": distributivity");
        auto wx = ghost(ring, x), wy = ghost(ring, y);
        auto ws = ghost(ring, witt_add(ring, x, y));
        auto wp = ghost(ring, witt_mul(ring, x, y));
        for (int i = 0; i < S.size(); ++i) {
            if (!ring.equal(ws[i], ring.add(wx[i], wy[i])))
                note(&WittLawReport::ghost_hom, at + ": ghost not additive");
            if (!ring.equal(wp[i], ring.mul(wx[i], wy[i])))
                note(&WittLawReport::ghost_hom, at + ": ghost not multiplicative");
        }
    }
    return rep;
}

}  // namespace cyctrace::witt
