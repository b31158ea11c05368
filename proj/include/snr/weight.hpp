#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "snr/boolmap.hpp"
#include "snr/census.hpp"
#include "snr/core.hpp"
#include "snr/rational.hpp"

namespace snr {

inline std::int64_t gamma_bound(Shape shape) { return std::int64_t{1} << (shape.n - 1); }

inline std::int64_t eta_bound(Shape shape) {
    return (std::int64_t{1} << shape.n) - (std::int64_t{1} << shape.neg_count());
}

// An (n,r)-weight function: exact rational values on the tilde and bar
// indices. pos_values[i-1] is the value of tilde i, neg_values[j-1] the
// value of bar j; the padding symbol is implicitly 0.
struct WeightFunction {
    Shape shape;
    std::vector<Rational> pos_values;
    std::vector<Rational> neg_values;

    const Rational& pos(int i) const { return pos_values[i - 1]; }
    const Rational& neg(int j) const { return neg_values[j - 1]; }

    // All n values, tilde side first: convenient for the census oracle.
    std::vector<Rational> all_values() const {
        std::vector<Rational> out = pos_values;
        out.insert(out.end(), neg_values.begin(), neg_values.end());
        return out;
    }
};

// Empty result means valid; otherwise one message per violated condition.
inline std::vector<std::string> validate(const WeightFunction& wf) {
    std::vector<std::string> violations;
    if (wf.pos_values.size() != static_cast<std::size_t>(wf.shape.r))
        violations.push_back("expected " + std::to_string(wf.shape.r) + " positive values");
    if (wf.neg_values.size() != static_cast<std::size_t>(wf.shape.neg_count()))
        violations.push_back("expected " + std::to_string(wf.shape.neg_count()) +
                             " negative values");
    if (!violations.empty()) return violations;

    if (!wf.pos_values.empty() && wf.pos_values.front() < 0)
        violations.push_back("condition (3): value of tilde 1 must be >= 0");
    for (std::size_t i = 1; i < wf.pos_values.size(); ++i)
        if (wf.pos_values[i] < wf.pos_values[i - 1])
            violations.push_back("condition (3): tilde values must ascend with the index");
    for (std::size_t j = 0; j < wf.neg_values.size(); ++j) {
        if (wf.neg_values[j] >= 0)
            violations.push_back("condition (3): bar values must be strictly negative");
        if (j > 0 && wf.neg_values[j] > wf.neg_values[j - 1])
            violations.push_back("condition (3): bar values must descend with the index");
    }
    Rational total = 0;
    for (const Rational& v : wf.pos_values) total += v;
    for (const Rational& v : wf.neg_values) total += v;
    if (total < 0) violations.push_back("condition (2): total sum is negative");
    return violations;
}

inline Rational sigma(const WeightFunction& wf, const LatticeString& w) {
    if (!(wf.shape == w.shape())) throw std::invalid_argument("shape mismatch");
    Rational total = 0;
    for (int i = 1; i <= wf.shape.r; ++i)
        if (w.has_pos(i)) total += wf.pos(i);
    for (int j = 1; j <= wf.shape.neg_count(); ++j)
        if (w.has_neg(j)) total += wf.neg(j);
    return total;
}

// The induced map A_f: P where the sum function is non-negative, except at
// theta which is N by definition. Subset sums are built incrementally per
// side, so the whole lattice costs O(2^r + 2^{n-r} + 2^n) rational ops.
inline BooleanMap induced_map(const LatticeUniverse& universe, const WeightFunction& wf) {
    if (!(wf.shape == universe.shape())) throw std::invalid_argument("shape mismatch");
    const int r = wf.shape.r;
    const int m = wf.shape.neg_count();

    auto side_sums = [](const std::vector<Rational>& values) {
        std::vector<Rational> sums(std::size_t{1} << values.size());
        for (std::size_t mask = 1; mask < sums.size(); ++mask) {
            const int low = std::countr_zero(mask);
            sums[mask] = sums[mask & (mask - 1)] + values[low];
        }
        return sums;
    };
    const std::vector<Rational> pos_sums = side_sums(wf.pos_values);
    const std::vector<Rational> neg_sums = side_sums(wf.neg_values);

    Bitset positives(universe.size());
    const Mask pos_full = LatticeString::full_mask(r);
    const Mask neg_full = LatticeString::full_mask(m);
    for (std::size_t index = 0; index < universe.size(); ++index) {
        const Mask neg = neg_full - static_cast<Mask>(index & neg_full);
        const Mask pos = pos_full - static_cast<Mask>(index >> m);
        if (pos == 0 && neg == 0) continue;  // theta is N by fiat
        if (pos_sums[pos] + neg_sums[neg] >= 0) positives.set(index);
    }
    return BooleanMap(wf.shape, positives);
}

inline BooleanMap induced_map(const WeightFunction& wf, int max_n = kDefaultMaxN) {
    return induced_map(LatticeUniverse(wf.shape, max_n), wf);
}

// Number of nonempty subsets of I(n,r) with non-negative sum, computed along
// the lattice path. The census module provides the independent oracles.
inline std::int64_t alpha(const WeightFunction& wf, int max_n = kDefaultMaxN) {
    return induced_map(wf, max_n).positive_count();
}

// The extremal weight function attaining the minimum count 2^{n-1}.
inline WeightFunction minimizer(Shape shape) {
    shape.require_mixed();
    const int m = shape.neg_count();
    WeightFunction wf{shape, {}, {}};
    wf.pos_values.assign(shape.r, Rational(m));
    wf.neg_values.assign(m, Rational(-1));
    wf.neg_values.back() = Rational(m) * (1 - shape.r) - 1;
    return wf;
}

// The extremal weight function attaining the maximum count 2^n - 2^{n-r}.
inline WeightFunction maximizer(Shape shape) {
    shape.require_mixed();
    const int m = shape.neg_count();
    WeightFunction wf{shape, {}, {}};
    wf.pos_values.assign(shape.r, Rational(1));
    wf.neg_values.assign(m, Rational(-1, m));
    return wf;
}

// Deterministic-per-seed valid weight function: monotone rational values are
// rejection-sampled until the total-sum condition holds.
inline WeightFunction sample_random(Shape shape, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int m = shape.neg_count();
    auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };
    for (;;) {
        WeightFunction wf{shape, {}, {}};
        // Positive numerators scale with n-r so the sum condition is
        // reachable for every r, including r = 1.
        const std::uint64_t pos_span = 64 * std::max(m, 1) + 1;
        for (int i = 0; i < shape.r; ++i) {
            const std::uint64_t den = 1 + draw(12);
            wf.pos_values.emplace_back(BigInt(draw(pos_span)), BigInt(den));
        }
        for (int j = 0; j < m; ++j) {
            const std::uint64_t den = 1 + draw(12);
            wf.neg_values.emplace_back(BigInt(-1 - static_cast<std::int64_t>(draw(64))),
                                       BigInt(den));
        }
        std::sort(wf.pos_values.begin(), wf.pos_values.end());
        std::sort(wf.neg_values.begin(), wf.neg_values.end(), std::greater<>());
        Rational total = 0;
        for (const Rational& v : wf.pos_values) total += v;
        for (const Rational& v : wf.neg_values) total += v;
        if (total >= 0) return wf;
    }
}

// Best-effort randomized search for a weight function with exactly q
// non-negative nonempty subset sums. A not-found result is NOT a proof of
// nonexistence; whether every q in [gamma, eta] is realized by an actual
// weight function is open.
inline std::optional<WeightFunction> search_realizing(Shape shape, std::int64_t q,
                                                      int budget,
                                                      std::uint64_t seed = 0x5eed) {
    shape.require_mixed();
    if (q < gamma_bound(shape) || q > eta_bound(shape))
        throw std::invalid_argument("q outside [gamma, eta]");

    auto count_of = [](const WeightFunction& wf) {
        return count_nonneg_subsets_mitm(RealMultiset{wf.all_values()});
    };

    if (q == gamma_bound(shape)) return minimizer(shape);
    if (q == eta_bound(shape)) return maximizer(shape);

    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        WeightFunction wf = sample_random(shape, rng());
        if (count_of(wf) == q) return wf;
        // Local walk: nudge the deepest bar value toward the target count.
        for (int step = 0; step < shape.n && attempt + 1 < budget; ++step, ++attempt) {
            const std::int64_t got = count_of(wf);
            if (got == q) return wf;
            WeightFunction next = wf;
            Rational& deep = next.neg_values.back();
            deep = (got > q) ? Rational(deep * 2) : Rational(deep / 2);
            if (!validate(next).empty()) break;
            wf = std::move(next);
        }
    }
    return std::nullopt;
}

}  // namespace snr
