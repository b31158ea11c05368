#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snr/boolmap.hpp"
#include "snr/core.hpp"
#include "snr/regions.hpp"
#include "snr/weight.hpp"

namespace snr {

enum class SynthCase { kA1, kA2, kExtremalMin, kExtremalMax };

inline const char* synth_case_name(SynthCase c) {
    switch (c) {
        case SynthCase::kA1: return "a1";
        case SynthCase::kA2: return "a2";
        case SynthCase::kExtremalMin:
        case SynthCase::kExtremalMax: return "extremal";
    }
    return "?";
}

// Bookkeeping of the intermediate-value construction over the sublattice
// S1+-: its rank R, the levels listed top-down, and the decomposition
// p = |levels 0..k| + s with the chosen level-(k+1) elements.
struct LevelDecomposition {
    Shape shape;
    int R{};
    std::vector<std::vector<LatticeString>> levels;  // levels[i] has height R - i
    std::vector<std::int64_t> betas;

    std::int64_t p{}, k{}, s{};
    std::vector<LatticeString> v_chosen;             // first s of levels[k+1]
    std::vector<LatticeString> t_in_up, t_rest;      // levels[k] split against up(v_chosen)
    std::vector<LatticeString> z_rest, z_in_down;    // levels[k+2] split against down(rest)
};

// Heights inside the induced subposet S1+- by longest-chain propagation from
// its bottom b1; level i collects the elements of height R - i in canonical
// order. Requires 1 < r < n (for r = 1 the sublattice is empty and the
// synthesis needs no levels).
inline LevelDecomposition rank_levels(const LatticeUniverse& universe) {
    const Shape shape = universe.shape();
    shape.require_mixed();
    if (shape.r < 2) throw std::invalid_argument("rank_levels requires r > 1");

    const Bitset members = region_bits(universe, Region::S1_PM);
    std::vector<int> height(universe.size(), -1);
    int max_height = 0;
    for (std::uint32_t idx : universe.rank_order()) {
        if (!members[idx]) continue;
        int h = 0;
        for (const LatticeString& v : lower_covers(universe.at(idx))) {
            const std::size_t below = universe.index_of(v);
            if (members[below]) h = std::max(h, height[below] + 1);
        }
        height[idx] = h;
        max_height = std::max(max_height, h);
    }

    LevelDecomposition out{shape, max_height, {}, {}, 0, 0, 0, {}, {}, {}, {}, {}};
    out.levels.assign(max_height + 1, {});
    for (std::size_t idx = 0; idx < universe.size(); ++idx)
        if (members[idx]) out.levels[max_height - height[idx]].push_back(universe.at(idx));
    for (const auto& level : out.levels)
        out.betas.push_back(static_cast<std::int64_t>(level.size()));
    return out;
}

// Greedy split p = sum(betas[0..k]) + s with 0 <= s < betas[k+1]; boundary
// values of p belong to the extremal constructions and are rejected here.
inline LevelDecomposition decompose(const LatticeUniverse& universe, std::int64_t q) {
    const Shape shape = universe.shape();
    if (q < gamma_bound(shape) || q > eta_bound(shape))
        throw std::invalid_argument("q outside [gamma, eta]");
    LevelDecomposition d = rank_levels(universe);
    const std::int64_t p = q - gamma_bound(shape);
    const std::int64_t total = eta_bound(shape) - gamma_bound(shape);
    if (p == 0 || p == total)
        throw std::domain_error("boundary q: use the extremal construction");

    std::int64_t prefix = 0;
    std::int64_t k = -1;
    while (prefix + d.betas[k + 1] <= p) prefix += d.betas[++k];
    d.p = p;
    d.k = k;
    d.s = p - prefix;
    d.v_chosen.assign(d.levels[k + 1].begin(), d.levels[k + 1].begin() + d.s);

    const Bitset up_v = universe.upset_bits(universe.bits_of(d.v_chosen));
    for (const LatticeString& w : d.levels[k]) {
        if (up_v[universe.index_of(w)])
            d.t_in_up.push_back(w);
        else
            d.t_rest.push_back(w);
    }
    std::vector<LatticeString> level_rest(d.levels[k + 1].begin() + d.s,
                                          d.levels[k + 1].end());
    if (k + 2 <= d.R) {
        const Bitset down_rest = universe.downset_bits(universe.bits_of(level_rest));
        for (const LatticeString& z : d.levels[k + 2]) {
            if (down_rest[universe.index_of(z)])
                d.z_in_down.push_back(z);
            else
                d.z_rest.push_back(z);
        }
    }
    return d;
}

namespace detail {

inline void check_q_range(Shape shape, std::int64_t q) {
    shape.require_mixed();
    if (q < gamma_bound(shape) || q > eta_bound(shape))
        throw std::invalid_argument(
            "q outside the valid interval [" + std::to_string(gamma_bound(shape)) + ", " +
            std::to_string(eta_bound(shape)) + "]");
}

}  // namespace detail

struct Synthesis {
    std::int64_t q{}, p{};
    SynthCase kind{};
    BooleanMap map;
    std::optional<Basis> basis;
    std::optional<LevelDecomposition> decomposition;
};

// The constructive core: a map in W+(n,r) with exactly q positive values.
// Boundary q and r = 1 fall back to the extremal induced maps; otherwise the
// positives are S2+- u S1+ u S2+ u (levels 0..k) u v_chosen.
inline Synthesis synthesize(const LatticeUniverse& universe, std::int64_t q,
                            bool with_basis = true) {
    const Shape shape = universe.shape();
    detail::check_q_range(shape, q);
    const std::int64_t p = q - gamma_bound(shape);

    if (shape.r == 1 || p == 0)
        return Synthesis{q, p, SynthCase::kExtremalMin,
                         induced_map(universe, minimizer(shape)), std::nullopt, std::nullopt};
    if (p == eta_bound(shape) - gamma_bound(shape))
        return Synthesis{q, p, SynthCase::kExtremalMax,
                         induced_map(universe, maximizer(shape)), std::nullopt, std::nullopt};

    LevelDecomposition d = decompose(universe, q);
    Bitset positives = region_bits(universe, Region::S2_PM) |
                       region_bits(universe, Region::S1_PLUS) |
                       region_bits(universe, Region::S2_PLUS);
    for (std::int64_t i = 0; i <= d.k; ++i)
        for (const LatticeString& w : d.levels[i]) positives.set(universe.index_of(w));
    for (const LatticeString& v : d.v_chosen) positives.set(universe.index_of(v));
    BooleanMap map(shape, positives);

    Synthesis result{q, p, SynthCase::kA1, std::move(map), std::nullopt, std::nullopt};
    if (with_basis) {
        // T+ = v_chosen u (level k not above any chosen v);
        // T- = (level k+1 minus v_chosen) u (level k+2 not below the rest).
        std::vector<LatticeString> t_plus = d.v_chosen;
        t_plus.insert(t_plus.end(), d.t_rest.begin(), d.t_rest.end());
        std::vector<LatticeString> t_minus(d.levels[d.k + 1].begin() + d.s,
                                           d.levels[d.k + 1].end());
        t_minus.insert(t_minus.end(), d.z_rest.begin(), d.z_rest.end());

        const LatticeString alpha_min = special(shape, SpecialElement::kAlpha);
        const Bitset up_t_plus = universe.upset_bits(universe.bits_of(t_plus));
        if (!up_t_plus[universe.index_of(alpha_min)]) {
            result.kind = SynthCase::kA2;
            t_plus.push_back(alpha_min);
        }
        t_minus.push_back(special(shape, SpecialElement::kTheta));
        result.basis = Basis(std::move(t_plus), std::move(t_minus));
    }
    result.decomposition = std::move(d);
    return result;
}

inline BooleanMap synthesize_map(const LatticeUniverse& universe, std::int64_t q) {
    return synthesize(universe, q, /*with_basis=*/false).map;
}

// Basis only exists for non-boundary q with r > 1.
inline Basis synthesize_basis(const LatticeUniverse& universe, std::int64_t q) {
    Synthesis s = synthesize(universe, q, /*with_basis=*/true);
    if (!s.basis)
        throw std::domain_error("no basis: extremal q is realized by an induced map");
    return *std::move(s.basis);
}

struct SynthesisReport {
    std::int64_t q{};
    bool count_ok{}, axioms_ok{};
    bool basis_applicable{};
    bool basis_ok{}, map_match{}, identities_ok{};
    std::vector<std::string> notes;

    bool all_pass() const {
        if (!count_ok || !axioms_ok) return false;
        if (basis_applicable && !(basis_ok && map_match && identities_ok)) return false;
        return true;
    }
};

// Full per-q verification: the count, BM1-BM3, and (when a basis exists)
// B1-B3 plus the two set identities tying the basis map to the direct map.
inline SynthesisReport verify_synthesis(const LatticeUniverse& universe, std::int64_t q) {
    SynthesisReport report;
    report.q = q;
    const Synthesis s = synthesize(universe, q, /*with_basis=*/true);

    report.count_ok = (s.map.positive_count() == q);
    if (!report.count_ok)
        report.notes.push_back("positive count " + std::to_string(s.map.positive_count()) +
                               " != q");
    const AxiomReport axioms = check_bm_axioms(universe, s.map);
    report.axioms_ok = axioms.all_pass();
    report.notes.insert(report.notes.end(), axioms.violations.begin(),
                        axioms.violations.end());

    report.basis_applicable = s.basis.has_value();
    if (s.basis) {
        const BasisReport basis_report = check_basis(universe, *s.basis);
        report.basis_ok = basis_report.all_pass();
        report.notes.insert(report.notes.end(), basis_report.violations.begin(),
                            basis_report.violations.end());
        if (report.basis_ok) {
            const BooleanMap rebuilt = map_from_basis(universe, *s.basis);
            report.map_match = (rebuilt.positive_bits() == s.map.positive_bits());
            if (!report.map_match) report.notes.push_back("basis map differs from direct map");

            // up(Y+) u up(Y-^c) must equal the positive side and down(Y-)
            // the negative side, exactly.
            const Bitset up_plus = universe.upset_bits(universe.bits_of(s.basis->y_plus));
            const Bitset up_minus_comp = universe.upset_bits(
                universe.bits_of(elementwise_complement(s.basis->y_minus)));
            const Bitset down_minus =
                universe.downset_bits(universe.bits_of(s.basis->y_minus));
            const bool first = ((up_plus | up_minus_comp) == s.map.positive_bits());
            const bool second = (down_minus == ~s.map.positive_bits());
            report.identities_ok = first && second;
            if (!first) report.notes.push_back("first set identity fails");
            if (!second) report.notes.push_back("second set identity fails");
        }
    }
    return report;
}

}  // namespace snr
