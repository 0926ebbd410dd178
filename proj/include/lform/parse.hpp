#pragma once

#include "lform/ratfun.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lform {

/// Syntax error with the 0-based character position where it occurred.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error("at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    char get() {
        skip_ws();
        if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
        return s_[i_++];
    }
    std::size_t pos() const { return i_; }

    /// Unsigned integer literal.
    Int integer() {
        skip_ws();
        const std::size_t start = i_;
        std::string digits;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            digits.push_back(s_[i_++]);
        if (digits.empty()) throw ParseError(start, "expected an integer");
        return Int(digits);
    }

    /// Signed integer literal (for exponents).
    std::int64_t signed_small_integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Int v = integer();
        if (v > Int(1) << 40) throw ParseError(i_, "exponent too large");
        auto r = static_cast<std::int64_t>(v.convert_to<long long>());
        return neg ? -r : r;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

} // namespace detail

/**
 * Parses the polynomial grammar: signed terms `c`, `c*t^k`, `c t^k`,
 * `t^k`, `t`, with k any integer. Examples: "2 - t - t^-1", "3*t^-2 + t".
 */
inline LaurentPoly parse_poly(const std::string& text) {
    detail::PolyLexer lx(text);
    LaurentPoly result;
    bool first = true;
    if (lx.at_end()) throw ParseError(0, "empty polynomial");
    while (!lx.at_end()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = (lx.get() == '-') ? -1 : 1;
        } else if (!first) {
            throw ParseError(lx.pos(), "expected '+' or '-' between terms");
        }
        first = false;

        Int coeff = 1;
        bool saw_coeff = false;
        std::int64_t exp = 0;
        bool saw_t = false;

        c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = lx.integer();
            saw_coeff = true;
            if (lx.peek() == '*') {
                lx.get();
                if (lx.peek() != 't') throw ParseError(lx.pos(), "expected 't' after '*'");
            }
        }
        if (lx.peek() == 't') {
            lx.get();
            saw_t = true;
            exp = 1;
            if (lx.peek() == '^') {
                lx.get();
                exp = lx.signed_small_integer();
            }
        }
        if (!saw_coeff && !saw_t)
            throw ParseError(lx.pos(), "expected a coefficient or 't'");
        result += LaurentPoly::monomial(sign > 0 ? coeff : Int(-coeff), saw_t ? exp : 0);
    }
    return result;
}

/// Parses "num / den" (or plain "num") with both sides in the polynomial grammar.
inline RatFun parse_ratfun(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return RatFun(parse_poly(text));
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    LaurentPoly d;
    try {
        d = parse_poly(den);
    } catch (const ParseError& e) {
        throw ParseError(slash + 1 + e.position(), "in denominator: " + std::string(e.what()));
    }
    if (d.is_zero()) throw ParseError(slash + 1, "zero denominator");
    return RatFun(parse_poly(num), d);
}

} // namespace lform
