#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "stringart/errors.hpp"
#include "stringart/polynomial.hpp"
#include "stringart/rational.hpp"

namespace stringart {

enum class ParseErrorKind {
    UnexpectedToken,
    NonNegativeExponentRequired,
    UnbalancedParenthesis,
    EmptyInput,
    InvalidNumber,
};

inline const char* parse_error_kind_name(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
        case ParseErrorKind::NonNegativeExponentRequired: return "NonNegativeExponentRequired";
        case ParseErrorKind::UnbalancedParenthesis: return "UnbalancedParenthesis";
        case ParseErrorKind::EmptyInput: return "EmptyInput";
        case ParseErrorKind::InvalidNumber: return "InvalidNumber";
    }
    return "UnexpectedToken";
}

// Raised with the exact 0-based character offset of the offending input.
// position == source length means the error is at end of input.
struct ParseError : Error {
    ParseErrorKind kind;
    std::size_t position;

    ParseError(ParseErrorKind k, std::size_t pos)
        : Error(std::string(parse_error_kind_name(k)) + " at offset " + std::to_string(pos)),
          kind(k),
          position(pos) {}
};

namespace detail {

// Recursive-descent parser for the expression grammar:
//   expression := '-'? term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := base ('^' nonneg-integer)?
//   base       := integer | integer '/' positive-integer
//              | variable | '(' expression ')'
// Whitespace is insignificant; juxtaposition is not multiplication.
class PolyParser {
public:
    explicit PolyParser(std::string_view src) : src_(src) {}

    Polynomial run() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(ParseErrorKind::EmptyInput, pos_);
        Polynomial p = expression();
        skip_ws();
        if (pos_ < src_.size()) {
            if (src_[pos_] == ')') throw ParseError(ParseErrorKind::UnbalancedParenthesis, pos_);
            throw ParseError(ParseErrorKind::UnexpectedToken, pos_);
        }
        return p;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_var_start(char c) { return c >= 'a' && c <= 'z'; }
    static bool is_var_part(char c) { return is_var_start(c) || is_digit(c) || c == '_'; }

    Polynomial expression() {
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    Polynomial term() {
        Polynomial p = factor();
        while (peek() == '*') {
            ++pos_;
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (peek() == '^') {
            ++pos_;
            b = pow(b, exponent());
        }
        return b;
    }

    Polynomial base() {
        const char c = peek();
        if (is_digit(c)) return number();
        if (is_var_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && is_var_part(src_[pos_])) ++pos_;
            return Polynomial::variable(std::string(src_.substr(start, pos_ - start)));
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            Polynomial p = expression();
            if (peek() != ')') throw ParseError(ParseErrorKind::UnbalancedParenthesis, open);
            ++pos_;
            return p;
        }
        throw ParseError(ParseErrorKind::UnexpectedToken, std::min(pos_, src_.size()));
    }

    BigInt digits() {
        BigInt v = 0;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    Polynomial number() {
        const BigInt n = digits();
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_at = pos_;
            if (pos_ >= src_.size() || !is_digit(src_[pos_]))
                throw ParseError(ParseErrorKind::InvalidNumber, std::min(den_at, src_.size()));
            const BigInt d = digits();
            if (d == 0) throw ParseError(ParseErrorKind::InvalidNumber, den_at);
            return Polynomial(Rational(n, d));
        }
        return Polynomial(Rational(n));
    }

    int exponent() {
        skip_ws();
        const std::size_t at = std::min(pos_, src_.size());
        if (pos_ >= src_.size() || !is_digit(src_[pos_]))
            throw ParseError(ParseErrorKind::NonNegativeExponentRequired, at);
        const BigInt e = digits();
        if (e > 2147483647) throw ParseError(ParseErrorKind::InvalidNumber, at);
        return e.convert_to<int>();
    }
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text) { return detail::PolyParser(text).run(); }

// Canonical text form: terms in canonical order, explicit '*', '^' only for
// exponents >= 2, coefficients as integers or p/q. parse_poly inverts this.
inline std::string format_poly(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        const bool first = out.empty();
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (c < 0)
            out += '-';
        else if (!first)
            out += '+';
        std::string body;
        if (mag != 1 || m.is_constant()) body = to_string(mag);
        for (const auto& [v, e] : m.exponents()) {
            if (!body.empty()) body += '*';
            body += v;
            if (e >= 2) body += '^' + std::to_string(e);
        }
        out += body;
    }
    return out;
}

}  // namespace stringart
