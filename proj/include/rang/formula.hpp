#pragma once
// Text form of rational functions in (λ, μ, u), written with the ASCII names l, m, u.
// Grammar: sums of products of powers; juxtaposition multiplies ("4l^2-6l*m+m^2").

#include <cctype>
#include <stdexcept>
#include <string>

#include "rang/polyring.hpp"

namespace rang {

struct FormulaSyntaxError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
class FormulaParser {
public:
    explicit FormulaParser(const std::string& s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw FormulaSyntaxError("formula '" + s_ + "': " + what + " at " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool starts_factor() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'l' || c == 'm' || c == 'u' || c == '(';
    }

    RatFunc expr() {
        RatFunc r = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++i_;
            RatFunc t = term();
            r = c == '+' ? r + t : r - t;
        }
        return r;
    }
    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++i_;
                RatFunc f = unary();
                r = c == '*' ? r * f : r / f;
            } else if (starts_factor()) {
                r = r * power();
            } else {
                return r;
            }
        }
    }
    RatFunc unary() {
        if (peek() == '-') {
            ++i_;
            return -unary();
        }
        if (peek() == '+') {
            ++i_;
            return unary();
        }
        return power();
    }
    RatFunc power() {
        RatFunc b = primary();
        if (peek() != '^') return b;
        ++i_;
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("exponent expected");
        int k = std::stoi(s_.substr(start, i_ - start));
        RatFunc r(1);
        for (int j = 0; j < k; ++j) r = r * b;
        return r;
    }
    RatFunc primary() {
        char c = peek();
        if (c == '(') {
            ++i_;
            RatFunc r = expr();
            if (peek() != ')') fail("')' expected");
            ++i_;
            return r;
        }
        if (c == 'l' || c == 'm' || c == 'u') {
            ++i_;
            return RatFunc(LPoly::var(c == 'l' ? 0 : c == 'm' ? 1 : 2));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return RatFunc(LPoly(Rational(Integer(s_.substr(start, i_ - start)))));
        }
        fail("unexpected character");
    }
};
}  // namespace detail

inline RatFunc parse_formula(const std::string& text) { return detail::FormulaParser(text).parse(); }

/// A formula that must be a polynomial (denominator a nonzero constant).
inline LPoly parse_polynomial(const std::string& text) {
    RatFunc r = parse_formula(text);
    if (r.den.total_degree() > 0) throw FormulaSyntaxError("formula '" + text + "' is not a polynomial");
    Rational d = r.den.eval<Rational>({Rational(0), Rational(0), Rational(0)});
    return r.num.map_coeffs<Rational>([&](const Rational& c) { return Rational(c / d); });
}

}  // namespace rang
