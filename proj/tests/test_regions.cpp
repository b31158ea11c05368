#include <catch2/catch_amalgamated.hpp>

#include "snr/regions.hpp"

using namespace snr;

TEST_CASE("classification of sample elements") {
    const Shape s(6, 2);
    CHECK(classify(parse_string(s, "21|0123")) == Region::S2_PLUS);
    CHECK(classify(parse_string(s, "21|1234")) == Region::S1_PLUS);
    CHECK(classify(parse_string(s, "00|0000")) == Region::S2_MINUS);
    CHECK(classify(parse_string(s, "00|1234")) == Region::S1_MINUS);
    CHECK(classify(parse_string(s, "10|0004")) == Region::S1_PM);
    CHECK(classify(parse_string(s, "20|0123")) == Region::S2_PM);
    CHECK_THROWS_AS(classify(top(Shape(3, 3))), std::invalid_argument);
}

TEST_CASE("the six regions partition the lattice with the closed-form sizes") {
    for (const Shape s : {Shape(6, 2), Shape(5, 3), Shape(2, 1), Shape(7, 4)}) {
        const LatticeUniverse u(s);
        Bitset all(u.size());
        std::int64_t total = 0;
        for (Region region : kAllRegions) {
            const Bitset bits = region_bits(u, region);
            CHECK(static_cast<std::int64_t>(bits.count()) == region_size(s, region));
            CHECK((all & bits).none());
            all |= bits;
            total += region_size(s, region);
        }
        CHECK(all.count() == u.size());
        CHECK(total == static_cast<std::int64_t>(u.size()));
    }
    CHECK(region_size(Shape(6, 2), Region::S1_PLUS) == 8);
    CHECK(region_size(Shape(6, 2), Region::S1_PM) == 16);
    CHECK(region_size(Shape(6, 2), Region::S2_MINUS) == 8);
}

TEST_CASE("special elements") {
    CHECK(render_string(special(Shape(3, 2), SpecialElement::kAlpha)) == "10|0");
    CHECK(render_string(special(Shape(3, 2), SpecialElement::kB1)) == "10|1");
    CHECK(render_string(special(Shape(3, 2), SpecialElement::kT1)) == "20|1");
    CHECK(render_string(special(Shape(5, 3), SpecialElement::kTheta)) == "000|00");
    CHECK(render_string(special(Shape(5, 3), SpecialElement::kBigTheta)) == "321|12");
    CHECK(render_string(special(Shape(6, 2), SpecialElement::kT1)) == "20|0004");
    CHECK(render_string(special(Shape(6, 2), SpecialElement::kAlpha)) == "10|0123");
}

TEST_CASE("alpha is the minimum of S2+- and [b1, t1] is exactly S1+-") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(4, 2)}) {
        const LatticeUniverse u(s);
        const LatticeString a = special(s, SpecialElement::kAlpha);
        CHECK(classify(a) == Region::S2_PM);
        for (const LatticeString& w : u.strings_of(region_bits(u, Region::S2_PM)))
            CHECK(leq(a, w));

        const LatticeString b1 = special(s, SpecialElement::kB1);
        const LatticeString t1 = special(s, SpecialElement::kT1);
        const Bitset s1pm = region_bits(u, Region::S1_PM);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const bool in_interval = leq(b1, u.at(i)) && leq(u.at(i), t1);
            REQUIRE(in_interval == s1pm[i]);
        }
    }
}

TEST_CASE("sublattice properties hold on small shapes") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(2, 1), Shape(7, 2)}) {
        const LatticeUniverse u(s);
        const RegionReport report = check_region_properties(u);
        INFO(s.n << "," << s.r);
        for (const std::string& c : report.counterexamples) INFO(c);
        CHECK(report.all_pass());
    }
}

TEST_CASE("the S1 side is an isomorphic copy of the next smaller lattice") {
    const Shape s(5, 3);
    const Shape smaller(4, 3);
    const LatticeUniverse u(s);
    std::vector<LatticeString> side;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u.at(i).has_neg(s.neg_count())) side.push_back(u.at(i));
    CHECK(side.size() == std::size_t{1} << smaller.n);

    auto drop_deepest = [&](const LatticeString& w) {
        return LatticeString(smaller, w.pos_mask(),
                             w.neg_mask() & LatticeString::full_mask(smaller.neg_count()));
    };
    for (const LatticeString& a : side)
        for (const LatticeString& b : side)
            REQUIRE(leq(a, b) == leq(drop_deepest(a), drop_deepest(b)));
}

TEST_CASE("no element of S2+- lies below an element of S1+-") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2)}) {
        const LatticeUniverse u(s);
        const auto s1pm = u.strings_of(region_bits(u, Region::S1_PM));
        const auto s2pm = u.strings_of(region_bits(u, Region::S2_PM));
        for (const LatticeString& a : s2pm)
            for (const LatticeString& b : s1pm) REQUIRE_FALSE(leq(a, b));
    }
}
