#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace snr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", plain integers and decimal strings ("-0.8", "1", ".5").
// Decimal inputs are converted exactly (0.9 -> 9/10), never through double.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    // strip surrounding whitespace
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    s = s.substr(first, last - first + 1);

    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("malformed rational: " + s);
        BigInt p(num), q(den);
        if (q == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rational(p, q);
    }

    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    BigInt num = 0;
    BigInt den = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; pos < s.size(); ++pos) {
        const char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("malformed decimal: " + s);
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed rational: " + s);
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
        any_digit = true;
    }
    if (!any_digit) throw std::invalid_argument("malformed rational: " + s);
    if (negative) num = -num;
    return Rational(num, den);
}

// "p/q" when the denominator is not 1, a plain integer otherwise.
inline std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(value);
    if (boost::multiprecision::denominator(value) != 1)
        out << '/' << boost::multiprecision::denominator(value);
    return out.str();
}

// Comma-separated list of rational literals.
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> values;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            values.push_back(parse_rational(current));
            current.clear();
        } else {
            current += c;
        }
    }
    values.push_back(parse_rational(current));
    return values;
}

}  // namespace snr
