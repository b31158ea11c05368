#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "snr/core.hpp"
#include "snr/regions.hpp"

namespace snr {

// A total map S(n,r) -> {N, P}, stored as the dense set of P-elements over
// the canonical enumeration index.
class BooleanMap {
public:
    BooleanMap(Shape shape, Bitset positives)
        : shape_(shape), positives_(std::move(positives)) {
        if (positives_.size() != (std::size_t{1} << shape.n))
            throw std::invalid_argument("positive set has wrong universe size");
    }

    const Shape& shape() const { return shape_; }
    const Bitset& positive_bits() const { return positives_; }

    bool is_positive(std::size_t index) const { return positives_[index]; }
    bool is_positive(const LatticeUniverse& universe, const LatticeString& w) const {
        return positives_[universe.index_of(w)];
    }

    std::int64_t positive_count() const {
        return static_cast<std::int64_t>(positives_.count());
    }

    bool operator==(const BooleanMap&) const = default;

private:
    Shape shape_;
    Bitset positives_;
};

inline std::int64_t positive_count(const BooleanMap& map) { return map.positive_count(); }

struct AxiomReport {
    bool bm1{}, bm2{}, bm3{};
    std::vector<std::string> violations;

    bool all_pass() const { return bm1 && bm2 && bm3; }
};

// BM1 is checked over cover pairs only; transitivity extends it to all pairs.
inline AxiomReport check_bm_axioms(const LatticeUniverse& universe, const BooleanMap& map) {
    AxiomReport report;
    report.bm1 = true;
    for (const auto& [lo, hi] : universe.cover_edges()) {
        if (map.is_positive(lo) && !map.is_positive(hi)) {
            report.bm1 = false;
            report.violations.push_back("BM1: " + render_string(universe.at(lo)) + " = P but " +
                                        render_string(universe.at(hi)) + " = N");
        }
    }
    report.bm2 = true;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (!map.is_positive(i) && !map.is_positive(universe.complement_index(i))) {
            report.bm2 = false;
            report.violations.push_back("BM2: both " + render_string(universe.at(i)) + " and " +
                                        render_string(universe.at(universe.complement_index(i))) +
                                        " = N");
        }
    }
    const Shape shape = universe.shape();
    const LatticeString xi1(shape, 1u, 0);  // 10...0|0...0
    const LatticeString theta(shape, 0, 0);
    const LatticeString big_theta(shape, LatticeString::full_mask(shape.r),
                                  LatticeString::full_mask(shape.neg_count()));
    report.bm3 = true;
    auto expect = [&](const LatticeString& w, bool positive, const char* label) {
        if (map.is_positive(universe.index_of(w)) != positive) {
            report.bm3 = false;
            report.violations.push_back(std::string("BM3: ") + label + " at " + render_string(w));
        }
    };
    expect(xi1, true, "expected P");
    expect(theta, false, "expected N");
    expect(big_theta, true, "expected P");
    return report;
}

// An ordered pair of disjoint antichains <Y+ | Y->. Disjointness and the
// antichain conditions are structural and enforced at construction; B1-B3
// are verified separately by check_basis.
struct Basis {
    std::vector<LatticeString> y_plus;
    std::vector<LatticeString> y_minus;

    Basis(std::vector<LatticeString> plus, std::vector<LatticeString> minus)
        : y_plus(std::move(plus)), y_minus(std::move(minus)) {
        if (!is_antichain(y_plus) || !is_antichain(y_minus))
            throw std::invalid_argument("basis parts must be antichains");
        for (const LatticeString& a : y_plus)
            for (const LatticeString& b : y_minus)
                if (a == b) throw std::invalid_argument("basis parts must be disjoint");
    }
};

inline std::vector<LatticeString> elementwise_complement(std::span<const LatticeString> z) {
    std::vector<LatticeString> out;
    out.reserve(z.size());
    for (const LatticeString& w : z) out.push_back(complement(w));
    return out;
}

struct BasisReport {
    bool b1{}, b2{}, b3{};
    std::vector<std::string> violations;

    bool all_pass() const { return b1 && b2 && b3; }
};

inline BasisReport check_basis(const LatticeUniverse& universe, const Basis& basis) {
    BasisReport report;
    const auto y_minus_comp = elementwise_complement(basis.y_minus);

    const Bitset down_plus = universe.downset_bits(universe.bits_of(basis.y_plus));
    const Bitset minus_comp = universe.bits_of(y_minus_comp);
    const Bitset up_plus = universe.upset_bits(universe.bits_of(basis.y_plus));
    const Bitset up_minus_comp = universe.upset_bits(minus_comp);
    const Bitset down_minus = universe.downset_bits(universe.bits_of(basis.y_minus));

    auto note = [&](const char* label, const Bitset& bad) {
        for (std::size_t i = bad.find_first(); i != Bitset::npos; i = bad.find_next(i))
            report.violations.push_back(std::string(label) + ": " +
                                        render_string(universe.at(i)));
    };

    const Bitset b1_bad = down_plus & minus_comp;
    report.b1 = b1_bad.none();
    if (!report.b1) note("B1", b1_bad);

    const Bitset b2_bad = (up_plus | up_minus_comp) & down_minus;
    report.b2 = b2_bad.none();
    if (!report.b2) note("B2", b2_bad);

    const Bitset b3_bad = ~(up_plus | up_minus_comp | down_minus);
    report.b3 = b3_bad.none();
    if (!report.b3) note("B3", b3_bad);

    return report;
}

// The map generated by a basis: P exactly on up(Y+) u up(Y-^c).
inline BooleanMap map_from_basis(const LatticeUniverse& universe, const Basis& basis) {
    const BasisReport report = check_basis(universe, basis);
    if (!report.all_pass())
        throw std::invalid_argument("invalid basis: B1/B2/B3 do not all hold");
    const Bitset positives =
        universe.upset_bits(universe.bits_of(basis.y_plus)) |
        universe.upset_bits(universe.bits_of(elementwise_complement(basis.y_minus)));
    return BooleanMap(universe.shape(), positives);
}

}  // namespace snr
