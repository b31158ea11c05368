#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "snr/core.hpp"

using namespace snr;

namespace {

// Quadratic order matrix used as the oracle against which the bit tricks and
// the incremental set operations are compared.
std::vector<std::vector<bool>> leq_matrix(const LatticeUniverse& u) {
    std::vector<std::vector<bool>> m(u.size(), std::vector<bool>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) m[i][j] = leq(u.at(i), u.at(j));
    return m;
}

}  // namespace

TEST_CASE("rendering uses compact digits for small shapes") {
    const Shape s(7, 4);
    const LatticeString w = make_string(s, {4, 3, 1}, {1, 3});
    CHECK(render_string(w) == "4310|013");
    CHECK(parse_string(s, "4310|013") == w);
}

TEST_CASE("rendering falls back to comma-separated components") {
    const Shape s(12, 2);
    const LatticeString w = make_string(s, {2}, {10});
    CHECK(render_string(w) == "2,0|0,0,0,0,0,0,0,0,0,10");
    CHECK(parse_string(s, "2,0|0,0,0,0,0,0,0,0,0,10") == w);
}

TEST_CASE("parsing round-trips every element") {
    for (const Shape s : {Shape(5, 3), Shape(4, 4), Shape(4, 1), Shape(10, 4), Shape(11, 10)}) {
        for (const LatticeString& w : enumerate(s)) {
            CHECK(parse_string(s, render_string(w)) == w);
        }
    }
}

TEST_CASE("parsing rejects malformed strings") {
    const Shape s(7, 4);
    CHECK_THROWS_AS(parse_string(s, "4310013"), std::invalid_argument);   // no bar
    CHECK_THROWS_AS(parse_string(s, "4410|013"), std::invalid_argument);  // repeated symbol
    CHECK_THROWS_AS(parse_string(s, "4301|013"), std::invalid_argument);  // not descending
    CHECK_THROWS_AS(parse_string(s, "4310|031"), std::invalid_argument);  // not ascending
    CHECK_THROWS_AS(parse_string(s, "4310|010"), std::invalid_argument);  // padding after bar
    CHECK_THROWS_AS(parse_string(s, "5310|013"), std::invalid_argument);  // symbol out of range
    CHECK_THROWS_AS(parse_string(s, "4310|014"), std::invalid_argument);  // symbol out of range
    CHECK_THROWS_AS(parse_string(s, "431|013"), std::invalid_argument);   // wrong width
    CHECK_THROWS_AS(parse_string(s, "4310|0133"), std::invalid_argument); // wrong width
    CHECK_THROWS_AS(parse_string(Shape(3, 2), "2x|0"), std::invalid_argument);
}

TEST_CASE("make_string validates indices") {
    CHECK_THROWS_AS(make_string(Shape(3, 2), {3}, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_string(Shape(3, 2), {1}, {2}), std::invalid_argument);
    CHECK_NOTHROW(make_string(Shape(3, 2), {2, 1}, {1}));
}

TEST_CASE("canonical enumeration of S(3,2)") {
    std::vector<std::string> got;
    for (const LatticeString& w : enumerate(Shape(3, 2))) got.push_back(render_string(w));
    const std::vector<std::string> want = {"21|1", "21|0", "20|1", "20|0",
                                           "10|1", "10|0", "00|1", "00|0"};
    CHECK(got == want);
}

TEST_CASE("canonical enumeration of S(1,1)") {
    std::vector<std::string> got;
    for (const LatticeString& w : enumerate(Shape(1, 1))) got.push_back(render_string(w));
    CHECK(got == std::vector<std::string>{"1|", "0|"});
}

TEST_CASE("index_of inverts at and complements reflect the index") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(4, 4), Shape(5, 1)}) {
        const LatticeUniverse u(s);
        for (std::size_t i = 0; i < u.size(); ++i) {
            CHECK(u.index_of(u.at(i)) == i);
            CHECK(u.index_of(complement(u.at(i))) == u.complement_index(i));
        }
        // canonical order starts at (full, full) and ends at (empty, empty)
        CHECK(u.at(0) == LatticeString(s, LatticeString::full_mask(s.r),
                                       LatticeString::full_mask(s.neg_count())));
        CHECK(u.at(u.size() - 1) == LatticeString(s, 0, 0));
        CHECK(u.complement_index(0) == u.size() - 1);
    }
}

TEST_CASE("the subset bijection is injective and signed correctly") {
    const Shape s(6, 2);
    std::set<std::vector<int>> images;
    for (const LatticeString& w : enumerate(s)) {
        const std::vector<int> subset = to_subset(w);
        for (int v : subset) {
            CHECK(v != 0);
            CHECK(v >= -(s.n - s.r));
            CHECK(v <= s.r);
        }
        images.insert(subset);
    }
    CHECK(images.size() == std::size_t{1} << s.n);
}

TEST_CASE("the order is reflexive, antisymmetric and transitive") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(4, 4), Shape(4, 1)}) {
        const LatticeUniverse u(s);
        const auto m = leq_matrix(u);
        for (std::size_t i = 0; i < u.size(); ++i) {
            REQUIRE(m[i][i]);
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (i != j && m[i][j]) REQUIRE_FALSE(m[j][i]);
                if (!m[i][j]) continue;
                for (std::size_t k = 0; k < u.size(); ++k)
                    if (m[j][k]) REQUIRE(m[i][k]);
            }
        }
    }
}

TEST_CASE("meet and join are the lattice operations of the order") {
    for (const Shape s : {Shape(5, 3), Shape(4, 2), Shape(4, 4)}) {
        const LatticeUniverse u(s);
        for (std::size_t i = 0; i < u.size(); ++i) {
            for (std::size_t j = 0; j < u.size(); ++j) {
                const LatticeString a = u.at(i), b = u.at(j);
                const LatticeString lo = meet(a, b), hi = join(a, b);
                REQUIRE(leq(lo, a));
                REQUIRE(leq(lo, b));
                REQUIRE(leq(a, hi));
                REQUIRE(leq(b, hi));
                REQUIRE((leq(a, b) == (lo == a)));
                REQUIRE((leq(a, b) == (hi == b)));
                // greatest lower bound / least upper bound against the oracle
                for (std::size_t k = 0; k < u.size(); ++k) {
                    const LatticeString c = u.at(k);
                    if (leq(c, a) && leq(c, b)) REQUIRE(leq(c, lo));
                    if (leq(a, c) && leq(b, c)) REQUIRE(leq(hi, c));
                }
            }
        }
    }
}

TEST_CASE("the lattice is distributive") {
    for (const Shape s : {Shape(5, 2), Shape(6, 3)}) {
        const LatticeUniverse u(s);
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j)
                for (std::size_t k = 0; k < u.size(); ++k) {
                    const LatticeString a = u.at(i), b = u.at(j), c = u.at(k);
                    REQUIRE(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
                }
    }
}

TEST_CASE("complementation is an involutive anti-automorphism") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2)}) {
        const LatticeUniverse u(s);
        for (std::size_t i = 0; i < u.size(); ++i) {
            const LatticeString a = u.at(i);
            CHECK(complement(complement(a)) == a);
            for (std::size_t j = 0; j < u.size(); ++j) {
                const LatticeString b = u.at(j);
                REQUIRE(leq(a, b) == leq(complement(b), complement(a)));
            }
        }
        CHECK(complement(top(s)) == bottom(s));
    }
    CHECK(render_string(complement(parse_string(Shape(7, 4), "4310|001"))) == "2000|023");
}

TEST_CASE("covers match the transitive reduction of the order") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(4, 4), Shape(5, 1)}) {
        const LatticeUniverse u(s);
        const auto m = leq_matrix(u);
        for (std::size_t i = 0; i < u.size(); ++i) {
            std::set<std::size_t> expected;
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (i == j || !m[i][j]) continue;
                bool strict_between = false;
                for (std::size_t k = 0; k < u.size() && !strict_between; ++k)
                    strict_between = (k != i && k != j && m[i][k] && m[k][j]);
                if (!strict_between) expected.insert(j);
            }
            std::set<std::size_t> got;
            for (const LatticeString& w : covers(u.at(i))) got.insert(u.index_of(w));
            REQUIRE(got == expected);
            std::set<std::size_t> below;
            for (const LatticeString& w : lower_covers(u.at(i))) below.insert(u.index_of(w));
            std::set<std::size_t> expected_below;
            for (std::size_t j = 0; j < u.size(); ++j) {
                bool covered = false;
                for (const LatticeString& w : covers(u.at(j)))
                    covered |= (u.index_of(w) == i);
                if (covered) expected_below.insert(j);
            }
            REQUIRE(below == expected_below);
        }
    }
}

TEST_CASE("rank agrees with cover-path distance from the bottom") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2), Shape(4, 4), Shape(6, 1)}) {
        const LatticeUniverse u(s);
        std::vector<int> dist(u.size(), -1);
        dist[u.index_of(bottom(s))] = 0;
        std::vector<std::size_t> frontier = {u.index_of(bottom(s))};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t i : frontier)
                for (const LatticeString& w : covers(u.at(i))) {
                    const std::size_t j = u.index_of(w);
                    if (dist[j] < 0) {
                        dist[j] = dist[i] + 1;
                        next.push_back(j);
                    }
                }
            frontier = std::move(next);
        }
        for (std::size_t i = 0; i < u.size(); ++i) REQUIRE(dist[i] == rank(u.at(i)));
        const int m = s.neg_count();
        CHECK(rank(top(s)) == s.r * (s.r + 1) / 2 + m * (m + 1) / 2);
        CHECK(rank(bottom(s)) == 0);
    }
}

TEST_CASE("covers raise the rank by exactly one") {
    for (const Shape s : {Shape(6, 3), Shape(7, 2)}) {
        const LatticeUniverse u(s);
        for (const auto& [lo, hi] : u.cover_edges()) {
            REQUIRE(rank(u.at(hi)) == rank(u.at(lo)) + 1);
            REQUIRE(leq(u.at(lo), u.at(hi)));
        }
    }
}

TEST_CASE("upset and downset agree with the order oracle") {
    for (const Shape s : {Shape(5, 3), Shape(6, 2)}) {
        const LatticeUniverse u(s);
        const auto m = leq_matrix(u);
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            Bitset seed(u.size());
            for (int z = 0; z < 3; ++z) seed.set(rng() % u.size());
            Bitset up_want(u.size()), down_want(u.size());
            for (std::size_t i = seed.find_first(); i != Bitset::npos; i = seed.find_next(i))
                for (std::size_t j = 0; j < u.size(); ++j) {
                    if (m[i][j]) up_want.set(j);
                    if (m[j][i]) down_want.set(j);
                }
            const Bitset up_got = u.upset_bits(seed);
            const Bitset down_got = u.downset_bits(seed);
            REQUIRE(up_got == up_want);
            REQUIRE(down_got == down_want);
            REQUIRE(u.upset_bits(up_got) == up_got);
            REQUIRE(u.downset_bits(down_got) == down_got);
        }
    }
}

TEST_CASE("antichain detection") {
    const Shape s(3, 2);
    const std::vector<LatticeString> chain = {parse_string(s, "00|1"), parse_string(s, "21|0")};
    CHECK_FALSE(is_antichain(chain));
    const std::vector<LatticeString> anti = {parse_string(s, "20|1"), parse_string(s, "10|0")};
    CHECK(is_antichain(anti));
    // theta and Theta are incomparable complements
    CHECK(is_antichain(std::vector<LatticeString>{parse_string(s, "00|0"),
                                                  parse_string(s, "21|1")}));
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Shape(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Shape(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(Shape(33, 2), std::invalid_argument);
    CHECK_THROWS_AS(LatticeUniverse(Shape(30, 2)), std::invalid_argument);
    CHECK_NOTHROW(Shape(32, 16));
}
