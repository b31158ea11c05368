#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "snr/rational.hpp"

namespace snr {

// A raw multiset of n real inputs (exact rationals). Zero counts as
// non-negative, matching the r-of-n split.
struct RealMultiset {
    std::vector<Rational> values;

    int n() const { return static_cast<int>(values.size()); }
    int r() const {
        return static_cast<int>(std::count_if(values.begin(), values.end(),
                                              [](const Rational& v) { return v >= 0; }));
    }
};

struct Signature {
    int n{};
    int r{};
    bool in_w{};  // total sum >= 0
};

inline Signature classify_signature(const RealMultiset& m) {
    Rational total = 0;
    for (const Rational& v : m.values) total += v;
    return Signature{m.n(), m.r(), total >= 0};
}

namespace detail {

// Clear denominators: multiply through by the lcm so subset-sum comparisons
// run on integers. The count is scale-invariant.
inline std::vector<BigInt> scaled_integers(const RealMultiset& m) {
    BigInt lcm = 1;
    for (const Rational& v : m.values) {
        const BigInt den = boost::multiprecision::denominator(v);
        lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<BigInt> out;
    out.reserve(m.values.size());
    for (const Rational& v : m.values)
        out.push_back(boost::multiprecision::numerator(v) *
                      (lcm / boost::multiprecision::denominator(v)));
    return out;
}

inline void count_dfs(const std::vector<BigInt>& values, std::size_t idx, BigInt& sum,
                      std::int64_t& count) {
    if (idx == values.size()) {
        if (sum >= 0) ++count;
        return;
    }
    count_dfs(values, idx + 1, sum, count);
    sum += values[idx];
    count_dfs(values, idx + 1, sum, count);
    sum -= values[idx];
}

inline std::vector<BigInt> half_sums(std::span<const BigInt> values) {
    std::vector<BigInt> sums(std::size_t{1} << values.size());
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = sums[mask & (mask - 1)] + values[low];
    }
    return sums;
}

}  // namespace detail

// Exhaustive count of nonempty subsets with non-negative sum.
inline std::int64_t count_nonneg_subsets_naive(const RealMultiset& m) {
    if (m.n() < 1) throw std::invalid_argument("need at least one value");
    if (m.n() > 24) throw std::invalid_argument("naive census supports n <= 24");
    const std::vector<BigInt> values = detail::scaled_integers(m);
    BigInt sum = 0;
    std::int64_t count = 0;
    detail::count_dfs(values, 0, sum, count);
    return count - 1;  // drop the empty subset
}

// Meet-in-the-middle count: enumerate the 2^{n/2} partial sums of each half,
// sort one side, count complementary pairs by binary search. Exact, no
// epsilon. Allocates two vectors of size 2^{n/2}.
inline std::int64_t count_nonneg_subsets_mitm(const RealMultiset& m) {
    if (m.n() < 1) throw std::invalid_argument("need at least one value");
    if (m.n() > 48) throw std::invalid_argument("mitm census supports n <= 48");
    std::vector<BigInt> values = detail::scaled_integers(m);
    std::sort(values.begin(), values.end(), std::greater<>());
    const std::size_t half = values.size() / 2;
    const std::vector<BigInt> left =
        detail::half_sums(std::span(values.data(), half));
    std::vector<BigInt> right =
        detail::half_sums(std::span(values.data() + half, values.size() - half));
    std::sort(right.begin(), right.end());
    std::int64_t count = 0;
    for (const BigInt& l : left) {
        const auto it = std::lower_bound(right.begin(), right.end(), -l);
        count += static_cast<std::int64_t>(right.end() - it);
    }
    return count - 1;
}

}  // namespace snr
