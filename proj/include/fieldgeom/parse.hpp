#ifndef FIELDGEOM_PARSE_HPP
#define FIELDGEOM_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fieldgeom/ratfunc.hpp"

namespace fieldgeom {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Recursive-descent parser for the rational-function grammar shared by the
 * CLI and scenario files:
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := factor (('*' | '/') factor)*
 *   factor := ('-' | '+')* base ('^' exponent)?
 *   base   := integer | variable | '(' expr ')'
 *
 * Variables are t1..tn (1-based). Exponents are integers, negative allowed.
 */
class ExprParser {
public:
    ExprParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input at position " + std::to_string(pos_));
        return r;
    }

private:
    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            skip_ws();
            if (match('+'))
                r += term();
            else if (match('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = factor();
        for (;;) {
            skip_ws();
            if (match('*')) {
                r *= factor();
            } else if (match('/')) {
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatFunc factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (take() == '-') neg = !neg;
            skip_ws();
        }
        RatFunc b = base();
        skip_ws();
        if (match('^')) {
            skip_ws();
            bool eneg = match('-');
            long e = integer();
            b = b.pow(eneg ? -e : e);
        }
        return neg ? -b : b;
    }

    RatFunc base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            take();
            RatFunc r = expr();
            skip_ws();
            if (!match(')')) throw ParseError("expected ')'");
            return r;
        }
        if (c == 't') {
            take();
            long idx = integer();
            if (idx < 1 || idx > nvars_)
                throw ParseError("variable t" + std::to_string(idx) + " out of range (n=" +
                                 std::to_string(nvars_) + ")");
            return RatFunc::variable(nvars_, static_cast<int>(idx - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RatFunc::constant(nvars_, Rational(integer()));
        throw ParseError(std::string("unexpected character '") + (c ? std::string(1, c) : "<end>") +
                         "' at position " + std::to_string(pos_));
    }

    long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer at position " + std::to_string(pos_));
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > 1000000000L) throw ParseError("integer literal too large");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    bool match(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

inline RatFunc parse_ratfunc(std::string_view text, int nvars) {
    return ExprParser(text, nvars).parse();
}

} // namespace fieldgeom

#endif
