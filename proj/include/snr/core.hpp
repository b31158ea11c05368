#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace snr {

// Largest n for which full-lattice operations (2^n entries) run by default.
inline constexpr int kDefaultMaxN = 24;

using Mask = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// The pair (n, r): n symbols total, r of them on the non-negative side.
struct Shape {
    int n{};
    int r{};

    Shape(int n_, int r_) : n(n_), r(r_) {
        if (n < 1 || r < 1 || r > n)
            throw std::invalid_argument("shape requires 1 <= r <= n");
        if (n > 32)
            throw std::invalid_argument("shape supports n <= 32");
    }

    int neg_count() const { return n - r; }

    bool operator==(const Shape&) const = default;

    // Operations built on the six-region decomposition need a negative side.
    void require_mixed() const {
        if (r == n)
            throw std::invalid_argument("operation requires r < n");
    }

    void require_enumerable(int max_n = kDefaultMaxN) const {
        if (n > max_n)
            throw std::invalid_argument("n too large for full-lattice enumeration");
    }
};

// An element of S(n,r): the set of tilde indices present on the positive
// side and the set of bar indices present on the negative side. Bit i-1 of
// each mask stands for index i.
class LatticeString {
public:
    LatticeString(Shape shape, Mask pos, Mask neg) : shape_(shape), pos_(pos), neg_(neg) {
        const Mask pos_full = full_mask(shape.r);
        const Mask neg_full = full_mask(shape.neg_count());
        if ((pos & ~pos_full) != 0 || (neg & ~neg_full) != 0)
            throw std::invalid_argument("index out of range for shape");
    }

    const Shape& shape() const { return shape_; }
    Mask pos_mask() const { return pos_; }
    Mask neg_mask() const { return neg_; }

    bool has_pos(int i) const { return (pos_ >> (i - 1)) & 1u; }
    bool has_neg(int j) const { return (neg_ >> (j - 1)) & 1u; }

    int pos_count() const { return std::popcount(pos_); }
    int neg_count() const { return std::popcount(neg_); }

    bool operator==(const LatticeString&) const = default;

    static Mask full_mask(int bits) { return bits == 0 ? 0u : (Mask{0xffffffffu} >> (32 - bits)); }

private:
    Shape shape_;
    Mask pos_;
    Mask neg_;
};

inline LatticeString make_string(Shape shape, std::span<const int> pos_set,
                                 std::span<const int> neg_set) {
    Mask pos = 0, neg = 0;
    for (int i : pos_set) {
        if (i < 1 || i > shape.r)
            throw std::invalid_argument("positive index out of range for shape");
        pos |= Mask{1} << (i - 1);
    }
    for (int j : neg_set) {
        if (j < 1 || j > shape.neg_count())
            throw std::invalid_argument("negative index out of range for shape");
        neg |= Mask{1} << (j - 1);
    }
    return LatticeString(shape, pos, neg);
}

inline LatticeString make_string(Shape shape, std::initializer_list<int> pos_set,
                                 std::initializer_list<int> neg_set) {
    return make_string(shape, std::span<const int>(pos_set.begin(), pos_set.size()),
                       std::span<const int>(neg_set.begin(), neg_set.size()));
}

namespace detail {

// Padded component vector of the positive side: tilde indices descending,
// then zeros up to length r. Values: tilde i -> +i, 0-section -> 0.
inline int fill_pos_components(const LatticeString& w, std::array<int, 32>& out) {
    const int r = w.shape().r;
    int k = 0;
    for (int i = r; i >= 1; --i)
        if (w.has_pos(i)) out[k++] = i;
    while (k < r) out[k++] = 0;
    return r;
}

// Padded component vector of the negative side: zeros first, then bar
// indices ascending. Values: 0-section -> 0, bar j -> -j. The resulting
// sequence is descending, so the componentwise integer order matches the
// total order on A(n,r).
inline int fill_neg_components(const LatticeString& w, std::array<int, 32>& out) {
    const int m = w.shape().neg_count();
    int k = m - w.neg_count();
    for (int i = 0; i < k; ++i) out[i] = 0;
    for (int j = 1; j <= m; ++j)
        if (w.has_neg(j)) out[k++] = -j;
    return m;
}

inline LatticeString from_components(Shape shape, const std::array<int, 32>& pos,
                                     const std::array<int, 32>& neg) {
    Mask p = 0, n = 0;
    for (int i = 0; i < shape.r; ++i)
        if (pos[i] > 0) p |= Mask{1} << (pos[i] - 1);
    for (int i = 0; i < shape.neg_count(); ++i)
        if (neg[i] < 0) n |= Mask{1} << (-neg[i] - 1);
    return LatticeString(shape, p, n);
}

inline void require_same_shape(const LatticeString& v, const LatticeString& w) {
    if (!(v.shape() == w.shape()))
        throw std::invalid_argument("shape mismatch");
}

}  // namespace detail

inline bool leq(const LatticeString& v, const LatticeString& w) {
    detail::require_same_shape(v, w);
    std::array<int, 32> a{}, b{};
    int len = detail::fill_pos_components(v, a);
    detail::fill_pos_components(w, b);
    for (int i = 0; i < len; ++i)
        if (a[i] > b[i]) return false;
    len = detail::fill_neg_components(v, a);
    detail::fill_neg_components(w, b);
    for (int i = 0; i < len; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline LatticeString meet(const LatticeString& v, const LatticeString& w) {
    detail::require_same_shape(v, w);
    std::array<int, 32> a{}, b{}, pos{}, neg{};
    int len = detail::fill_pos_components(v, a);
    detail::fill_pos_components(w, b);
    for (int i = 0; i < len; ++i) pos[i] = std::min(a[i], b[i]);
    len = detail::fill_neg_components(v, a);
    detail::fill_neg_components(w, b);
    for (int i = 0; i < len; ++i) neg[i] = std::min(a[i], b[i]);
    return detail::from_components(v.shape(), pos, neg);
}

inline LatticeString join(const LatticeString& v, const LatticeString& w) {
    detail::require_same_shape(v, w);
    std::array<int, 32> a{}, b{}, pos{}, neg{};
    int len = detail::fill_pos_components(v, a);
    detail::fill_pos_components(w, b);
    for (int i = 0; i < len; ++i) pos[i] = std::max(a[i], b[i]);
    len = detail::fill_neg_components(v, a);
    detail::fill_neg_components(w, b);
    for (int i = 0; i < len; ++i) neg[i] = std::max(a[i], b[i]);
    return detail::from_components(v.shape(), pos, neg);
}

inline LatticeString complement(const LatticeString& w) {
    const Shape s = w.shape();
    return LatticeString(s, LatticeString::full_mask(s.r) & ~w.pos_mask(),
                         LatticeString::full_mask(s.neg_count()) & ~w.neg_mask());
}

// Image of an element under the bijection with the power set of I(n,r):
// +i for a tilde index, -j for a bar index.
inline std::vector<int> to_subset(const LatticeString& w) {
    std::vector<int> out;
    for (int i = 1; i <= w.shape().r; ++i)
        if (w.has_pos(i)) out.push_back(i);
    for (int j = 1; j <= w.shape().neg_count(); ++j)
        if (w.has_neg(j)) out.push_back(-j);
    return out;
}

// Graded rank: sum of tilde indices present plus sum of bar indices absent.
inline int rank(const LatticeString& w) {
    int total = 0;
    for (int i = 1; i <= w.shape().r; ++i)
        if (w.has_pos(i)) total += i;
    for (int j = 1; j <= w.shape().neg_count(); ++j)
        if (!w.has_neg(j)) total += j;
    return total;
}

inline LatticeString bottom(Shape shape) {
    return LatticeString(shape, 0, LatticeString::full_mask(shape.neg_count()));
}

inline LatticeString top(Shape shape) {
    return LatticeString(shape, LatticeString::full_mask(shape.r), 0);
}

// Elements covering w. The four upward moves each raise the rank by one:
// add tilde 1, replace tilde p by p+1, remove bar 1, replace bar q by q-1.
inline std::vector<LatticeString> covers(const LatticeString& w) {
    const Shape s = w.shape();
    std::vector<LatticeString> out;
    const Mask pos = w.pos_mask();
    const Mask neg = w.neg_mask();
    if (s.r >= 1 && !w.has_pos(1))
        out.emplace_back(s, pos | 1u, neg);
    for (int p = 1; p < s.r; ++p)
        if (w.has_pos(p) && !w.has_pos(p + 1))
            out.emplace_back(s, (pos & ~(Mask{1} << (p - 1))) | (Mask{1} << p), neg);
    if (s.neg_count() >= 1 && w.has_neg(1))
        out.emplace_back(s, pos, neg & ~Mask{1});
    for (int q = 2; q <= s.neg_count(); ++q)
        if (w.has_neg(q) && !w.has_neg(q - 1))
            out.emplace_back(s, pos, (neg & ~(Mask{1} << (q - 1))) | (Mask{1} << (q - 2)));
    return out;
}

// Elements covered by w (the inverse moves).
inline std::vector<LatticeString> lower_covers(const LatticeString& w) {
    const Shape s = w.shape();
    std::vector<LatticeString> out;
    const Mask pos = w.pos_mask();
    const Mask neg = w.neg_mask();
    if (s.r >= 1 && w.has_pos(1))
        out.emplace_back(s, pos & ~Mask{1}, neg);
    for (int p = 2; p <= s.r; ++p)
        if (w.has_pos(p) && !w.has_pos(p - 1))
            out.emplace_back(s, (pos & ~(Mask{1} << (p - 1))) | (Mask{1} << (p - 2)), neg);
    if (s.neg_count() >= 1 && !w.has_neg(1))
        out.emplace_back(s, pos, neg | 1u);
    for (int q = 1; q < s.neg_count(); ++q)
        if (w.has_neg(q) && !w.has_neg(q + 1))
            out.emplace_back(s, pos, (neg & ~(Mask{1} << (q - 1))) | (Mask{1} << q));
    return out;
}

// -------- text form --------

namespace detail {

inline bool compact_form(Shape s) { return std::max(s.r, s.neg_count()) <= 9; }

}  // namespace detail

// Compact digit form ("4310|013") while every symbol fits in one digit,
// otherwise comma-separated components ("12,3,0,0|0,1,10").
inline std::string render_string(const LatticeString& w) {
    const Shape s = w.shape();
    std::array<int, 32> pos{}, neg{};
    detail::fill_pos_components(w, pos);
    detail::fill_neg_components(w, neg);
    std::string out;
    if (detail::compact_form(s)) {
        for (int i = 0; i < s.r; ++i) out += static_cast<char>('0' + pos[i]);
        out += '|';
        for (int i = 0; i < s.neg_count(); ++i) out += static_cast<char>('0' - neg[i]);
    } else {
        for (int i = 0; i < s.r; ++i) {
            if (i) out += ',';
            out += std::to_string(pos[i]);
        }
        out += '|';
        for (int i = 0; i < s.neg_count(); ++i) {
            if (i) out += ',';
            out += std::to_string(-neg[i]);
        }
    }
    return out;
}

namespace detail {

inline std::vector<int> parse_side(std::string_view side, int expected_len,
                                   const char* which) {
    std::vector<int> values;
    if (side.find(',') != std::string_view::npos || expected_len == 0 ||
        (!side.empty() && side.size() != static_cast<std::size_t>(expected_len))) {
        // comma-separated general form
        if (!side.empty()) {
            std::string cur;
            auto flush = [&] {
                if (cur.empty()) throw std::invalid_argument("malformed string component");
                values.push_back(std::stoi(cur));
                cur.clear();
            };
            for (char c : side) {
                if (c == ',') {
                    flush();
                } else if (c >= '0' && c <= '9') {
                    cur += c;
                } else {
                    throw std::invalid_argument("malformed string component");
                }
            }
            flush();
        }
    } else {
        for (char c : side) {
            if (c < '0' || c > '9') throw std::invalid_argument("malformed string component");
            values.push_back(c - '0');
        }
    }
    if (values.size() != static_cast<std::size_t>(expected_len))
        throw std::invalid_argument(std::string("wrong number of symbols on ") + which +
                                    " side");
    return values;
}

}  // namespace detail

// Inverse of render_string; validates the string conditions (monotone sides,
// indices in range, only the padding symbol repeated).
inline LatticeString parse_string(Shape shape, std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw std::invalid_argument("string must contain '|'");
    const auto left = detail::parse_side(text.substr(0, bar), shape.r, "positive");
    const auto right = detail::parse_side(text.substr(bar + 1), shape.neg_count(), "negative");

    Mask pos = 0, neg = 0;
    int prev = shape.r + 1;
    for (int v : left) {
        if (v > shape.r) throw std::invalid_argument("positive symbol out of range");
        if (v > prev || (v != 0 && v == prev))
            throw std::invalid_argument("positive side must descend with distinct symbols");
        prev = v;
        if (v != 0) pos |= Mask{1} << (v - 1);
    }
    prev = 0;
    bool seen_bar = false;
    for (int v : right) {
        if (v > shape.neg_count()) throw std::invalid_argument("negative symbol out of range");
        if (v == 0) {
            if (seen_bar) throw std::invalid_argument("padding after bar symbol");
        } else {
            if (seen_bar && v <= prev)
                throw std::invalid_argument("negative side must ascend with distinct symbols");
            neg |= Mask{1} << (v - 1);
            prev = v;
            seen_bar = true;
        }
    }
    return LatticeString(shape, pos, neg);
}

// -------- full-lattice context --------

// The 2^n elements of S(n,r) in canonical order: descending by positive-side
// bit encoding, then descending by negative-side bit encoding. Index 0 is the
// top element, index 2^n - 1 is the bottom.
class LatticeUniverse {
public:
    explicit LatticeUniverse(Shape shape, int max_n = kDefaultMaxN) : shape_(shape) {
        shape.require_enumerable(max_n);
    }

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return std::size_t{1} << shape_.n; }

    LatticeString at(std::size_t index) const {
        const int m = shape_.neg_count();
        const Mask neg_full = LatticeString::full_mask(m);
        const Mask pos_full = LatticeString::full_mask(shape_.r);
        const Mask neg = neg_full - static_cast<Mask>(index & neg_full);
        const Mask pos = pos_full - static_cast<Mask>(index >> m);
        return LatticeString(shape_, pos, neg);
    }

    std::size_t index_of(const LatticeString& w) const {
        if (!(w.shape() == shape_)) throw std::invalid_argument("shape mismatch");
        const int m = shape_.neg_count();
        const Mask neg_full = LatticeString::full_mask(m);
        const Mask pos_full = LatticeString::full_mask(shape_.r);
        return (static_cast<std::size_t>(pos_full - w.pos_mask()) << m) +
               (neg_full - w.neg_mask());
    }

    std::size_t complement_index(std::size_t index) const {
        return size() - 1 - index;
    }

    std::vector<LatticeString> elements() const {
        std::vector<LatticeString> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
        return out;
    }

    // Cover edges as (lower index, upper index) pairs. Built on first use.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cover_edges() const {
        std::call_once(edges_once_, [this] {
            for (std::size_t i = 0; i < size(); ++i) {
                const LatticeString w = at(i);
                for (const LatticeString& u : covers(w))
                    edges_.emplace_back(static_cast<std::uint32_t>(i),
                                        static_cast<std::uint32_t>(index_of(u)));
            }
        });
        return edges_;
    }

    // Indices sorted by rank ascending: a linear extension of the order.
    const std::vector<std::uint32_t>& rank_order() const {
        std::call_once(order_once_, [this] {
            order_.resize(size());
            for (std::size_t i = 0; i < size(); ++i) order_[i] = static_cast<std::uint32_t>(i);
            std::vector<int> ranks(size());
            for (std::size_t i = 0; i < size(); ++i) ranks[i] = rank(at(i));
            std::stable_sort(order_.begin(), order_.end(),
                             [&](std::uint32_t a, std::uint32_t b) { return ranks[a] < ranks[b]; });
        });
        return order_;
    }

    Bitset upset_bits(const Bitset& seed) const {
        Bitset marked = seed;
        for (std::uint32_t idx : rank_order()) {
            if (marked[idx]) continue;
            for (const LatticeString& v : lower_covers(at(idx))) {
                if (marked[index_of(v)]) {
                    marked.set(idx);
                    break;
                }
            }
        }
        return marked;
    }

    Bitset downset_bits(const Bitset& seed) const {
        Bitset marked = seed;
        const auto& order = rank_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (marked[*it]) continue;
            for (const LatticeString& u : covers(at(*it))) {
                if (marked[index_of(u)]) {
                    marked.set(*it);
                    break;
                }
            }
        }
        return marked;
    }

    Bitset bits_of(std::span<const LatticeString> elements) const {
        Bitset seed(size());
        for (const LatticeString& w : elements) seed.set(index_of(w));
        return seed;
    }

    std::vector<LatticeString> strings_of(const Bitset& bits) const {
        std::vector<LatticeString> out;
        for (std::size_t i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
            out.push_back(at(i));
        return out;
    }

    std::vector<LatticeString> upset(std::span<const LatticeString> z) const {
        return strings_of(upset_bits(bits_of(z)));
    }

    std::vector<LatticeString> downset(std::span<const LatticeString> z) const {
        return strings_of(downset_bits(bits_of(z)));
    }

private:
    Shape shape_;
    mutable std::once_flag edges_once_;
    mutable std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    mutable std::once_flag order_once_;
    mutable std::vector<std::uint32_t> order_;
};

inline std::vector<LatticeString> enumerate(Shape shape, int max_n = kDefaultMaxN) {
    return LatticeUniverse(shape, max_n).elements();
}

inline bool is_antichain(std::span<const LatticeString> z) {
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            if (leq(z[i], z[j]) || leq(z[j], z[i])) return false;
    return true;
}

}  // namespace snr
