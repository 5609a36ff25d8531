#ifndef FPURE_PARSER_HPP
#define FPURE_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace fpure {

namespace detail {

// Recursive-descent parser over
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | atom ('^' integer)?
//   atom   := integer | name | '(' expr ')'
class PolynomialParser {
public:
    PolynomialParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_space();
        if (pos_ == text_.size()) fail("empty expression");
        auto result = expr();
        skip_space();
        if (pos_ != text_.size()) {
            if (starts_atom()) fail("implicit multiplication is not allowed; use '*'");
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("column " + std::to_string(pos_ + 1) + ": " + msg, 1, pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool starts_atom() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        auto c = static_cast<unsigned char>(text_[pos_]);
        return std::isalnum(c) || c == '(';
    }

    Polynomial expr() {
        auto acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        auto acc = factor();
        while (peek('*')) {
            ++pos_;
            acc *= factor();
        }
        if (starts_atom()) fail("implicit multiplication is not allowed; use '*'");
        return acc;
    }

    Polynomial factor() {
        if (peek('-')) {
            ++pos_;
            return -factor();
        }
        if (peek('+')) {
            ++pos_;
            return factor();
        }
        auto base = atom();
        if (peek('^')) {
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("exponent must be a non-negative integer literal");
            }
            std::int64_t e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + (text_[pos_] - '0');
                if (e > kMaxExponent) fail("exponent exceeds 2^31 - 1");
                ++pos_;
            }
            return pow(base, static_cast<std::uint64_t>(e));
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        auto c = static_cast<unsigned char>(text_[pos_]);
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(c)) {
            const std::int64_t p = ring_->characteristic();
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = (v * 10 + (text_[pos_] - '0')) % p;
                ++pos_;
            }
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                fail("implicit multiplication is not allowed; use '*'");
            }
            return Polynomial::constant(ring_, v);
        }
        if (std::isalpha(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string_view name = text_.substr(start, pos_ - start);
            const auto& names = ring_->names();
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (names[i] == name) return Polynomial::variable(ring_, i);
            }
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail(std::string("unexpected character '") + text_[pos_] + "'");
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial expression over the given ring. Coefficients are
/// reduced mod p; errors carry the 1-based column of the offending input.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return detail::PolynomialParser(text, ring).parse();
}

}  // namespace fpure

#endif
