#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snr/core.hpp"

namespace snr {

// The six sublattices partitioning S(n,r) for 0 < r < n. The S1 side holds
// the strings whose deepest bar symbol (n-r) is present; within each side
// the positive part is full (+), empty (-) or strictly mixed (+-).
enum class Region { S1_PLUS, S1_PM, S1_MINUS, S2_PLUS, S2_PM, S2_MINUS };

inline const char* region_name(Region region) {
    switch (region) {
        case Region::S1_PLUS: return "S1+";
        case Region::S1_PM: return "S1+-";
        case Region::S1_MINUS: return "S1-";
        case Region::S2_PLUS: return "S2+";
        case Region::S2_PM: return "S2+-";
        case Region::S2_MINUS: return "S2-";
    }
    return "?";
}

inline constexpr Region kAllRegions[6] = {Region::S1_PLUS, Region::S1_PM,  Region::S1_MINUS,
                                          Region::S2_PLUS, Region::S2_PM, Region::S2_MINUS};

inline Region classify(const LatticeString& w) {
    const Shape s = w.shape();
    s.require_mixed();
    const bool s1 = w.has_neg(s.neg_count());
    const int count = w.pos_count();
    if (count == s.r) return s1 ? Region::S1_PLUS : Region::S2_PLUS;
    if (count == 0) return s1 ? Region::S1_MINUS : Region::S2_MINUS;
    return s1 ? Region::S1_PM : Region::S2_PM;
}

// The named elements used throughout the region decomposition:
// theta, Theta, the minimum alpha of S2+-, and the bottom/top b1/t1 of S1+-.
enum class SpecialElement { kTheta, kBigTheta, kAlpha, kB1, kT1 };

inline LatticeString special(Shape shape, SpecialElement name) {
    shape.require_mixed();
    const int m = shape.neg_count();
    switch (name) {
        case SpecialElement::kTheta:
            return LatticeString(shape, 0, 0);
        case SpecialElement::kBigTheta:
            return LatticeString(shape, LatticeString::full_mask(shape.r),
                                 LatticeString::full_mask(m));
        case SpecialElement::kAlpha:
            return LatticeString(shape, 1u, LatticeString::full_mask(m - 1));
        case SpecialElement::kB1:
            return LatticeString(shape, 1u, LatticeString::full_mask(m));
        case SpecialElement::kT1:
            return LatticeString(shape, LatticeString::full_mask(shape.r) & ~Mask{1},
                                 Mask{1} << (m - 1));
    }
    throw std::invalid_argument("unknown special element");
}

// Closed-form sizes: |Si+| = |Si-| = 2^{n-r-1}, |Si+-| = (2^r - 2) * 2^{n-r-1}.
inline std::int64_t region_size(Shape shape, Region region) {
    shape.require_mixed();
    const std::int64_t half = std::int64_t{1} << (shape.neg_count() - 1);
    switch (region) {
        case Region::S1_PLUS:
        case Region::S1_MINUS:
        case Region::S2_PLUS:
        case Region::S2_MINUS:
            return half;
        case Region::S1_PM:
        case Region::S2_PM:
            return ((std::int64_t{1} << shape.r) - 2) * half;
    }
    return 0;
}

inline Bitset region_bits(const LatticeUniverse& universe, Region region) {
    Bitset bits(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (classify(universe.at(i)) == region) bits.set(i);
    return bits;
}

struct RegionReport {
    // i)   up(Theta) = S1+ u S2+
    // ii)  down(theta) = S1- u S2-
    // iii) up(S2+-) is contained in S2+- u S2+
    // iv)  down(S1+-) is contained in S1+- u S1-
    // v)   (S1+-)^c = S2+-
    bool item[5]{};
    std::vector<std::string> counterexamples;

    bool all_pass() const {
        for (bool b : item)
            if (!b) return false;
        return true;
    }
};

inline RegionReport check_region_properties(const LatticeUniverse& universe) {
    const Shape shape = universe.shape();
    shape.require_mixed();
    RegionReport report;

    const Bitset s1p = region_bits(universe, Region::S1_PLUS);
    const Bitset s1pm = region_bits(universe, Region::S1_PM);
    const Bitset s1m = region_bits(universe, Region::S1_MINUS);
    const Bitset s2p = region_bits(universe, Region::S2_PLUS);
    const Bitset s2pm = region_bits(universe, Region::S2_PM);
    const Bitset s2m = region_bits(universe, Region::S2_MINUS);

    auto singleton = [&](SpecialElement e) {
        Bitset b(universe.size());
        b.set(universe.index_of(special(shape, e)));
        return b;
    };
    auto note_diff = [&](const char* label, const Bitset& got, const Bitset& want) {
        const Bitset diff = got ^ want;
        for (std::size_t i = diff.find_first(); i != Bitset::npos; i = diff.find_next(i))
            report.counterexamples.push_back(std::string(label) + ": " +
                                             render_string(universe.at(i)));
    };

    const Bitset up_theta = universe.upset_bits(singleton(SpecialElement::kBigTheta));
    report.item[0] = (up_theta == (s1p | s2p));
    if (!report.item[0]) note_diff("i", up_theta, s1p | s2p);

    const Bitset down_theta = universe.downset_bits(singleton(SpecialElement::kTheta));
    report.item[1] = (down_theta == (s1m | s2m));
    if (!report.item[1]) note_diff("ii", down_theta, s1m | s2m);

    const Bitset up_s2pm = universe.upset_bits(s2pm);
    report.item[2] = ((up_s2pm & ~(s2pm | s2p)).none());
    if (!report.item[2]) note_diff("iii", up_s2pm & ~(s2pm | s2p), Bitset(universe.size()));

    const Bitset down_s1pm = universe.downset_bits(s1pm);
    report.item[3] = ((down_s1pm & ~(s1pm | s1m)).none());
    if (!report.item[3]) note_diff("iv", down_s1pm & ~(s1pm | s1m), Bitset(universe.size()));

    Bitset s1pm_comp(universe.size());
    for (std::size_t i = s1pm.find_first(); i != Bitset::npos; i = s1pm.find_next(i))
        s1pm_comp.set(universe.complement_index(i));
    report.item[4] = (s1pm_comp == s2pm);
    if (!report.item[4]) note_diff("v", s1pm_comp, s2pm);

    return report;
}

}  // namespace snr
