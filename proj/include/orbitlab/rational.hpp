#pragma once

#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/errors.hpp"

// boost 1.74 mixed rational/integer equality recurses forever under C++20 rewritten
// comparisons; exact non-template overloads take precedence.
namespace boost {
#define ORBITLAB_RATIONAL_EQ(I)                                                              \
    inline bool operator==(const rational<std::int64_t>& a, I b) {                          \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);       \
    }                                                                                        \
    inline bool operator==(I b, const rational<std::int64_t>& a) { return a == b; }         \
    inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); }      \
    inline bool operator!=(I b, const rational<std::int64_t>& a) { return !(a == b); }
ORBITLAB_RATIONAL_EQ(int)
ORBITLAB_RATIONAL_EQ(long)
ORBITLAB_RATIONAL_EQ(long long)
#undef ORBITLAB_RATIONAL_EQ
}  // namespace boost

namespace orbitlab {

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using Vec = std::vector<Rational>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

inline Vec operator-(const Vec& a) {
    Vec out(a);
    for (auto& x : out) x = -x;
    return out;
}

inline Vec operator*(const Rational& s, const Vec& a) {
    Vec out(a);
    for (auto& x : out) x *= s;
    return out;
}

inline Rational euclid_dot(const Vec& a, const Vec& b) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// Parses an exact rational written as a signed sum of integer / fraction terms,
// e.g. "-1/2", "7", "-4+7/12", "-30 + 37/6". Floats are rejected.
inline Rational parse_rational(std::string_view text) {
    Rational total = 0;
    std::size_t i = 0;
    bool any_term = false;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&](Int& out) {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) return false;
        out = std::stoll(std::string(text.substr(start, i - start)));
        return true;
    };
    skip_ws();
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -sign;
            ++i;
            skip_ws();
        }
        Int num = 0;
        if (!read_int(num)) throw DomainError("malformed rational '" + std::string(text) + "'");
        Int den = 1;
        skip_ws();
        if (i < text.size() && text[i] == '/') {
            ++i;
            if (!read_int(den) || den == 0)
                throw DomainError("malformed rational '" + std::string(text) + "'");
        }
        total += Rational(sign * num, den);
        any_term = true;
        skip_ws();
        if (i < text.size() && text[i] != '+' && text[i] != '-')
            throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    if (!any_term) throw DomainError("empty rational");
    return total;
}

}  // namespace orbitlab
