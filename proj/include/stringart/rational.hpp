#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "stringart/errors.hpp"

namespace stringart {

// Coefficient domain: arbitrary-precision rationals, always kept in canonical
// form (gcd(|num|, den) = 1, den > 0, zero = 0/1). cpp_rational maintains
// exactly this normalization on every operation.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

// Accepts "p", "-p", "p/q" with integer p and positive integer q. Decimal
// and exponent notation are rejected: inputs stay exact.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw Error("invalid rational literal: \"" + std::string(s) + "\""); };
    if (s.empty()) fail();
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = (s[i] == '-');
        ++i;
    }
    auto read_digits = [&](BigInt& out) {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') fail();
        out = 0;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            out = out * 10 + (s[i] - '0');
            ++i;
        }
    };
    BigInt n;
    read_digits(n);
    BigInt d = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        read_digits(d);
        if (d == 0) fail();
    }
    if (i != s.size()) fail();
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

}  // namespace stringart
