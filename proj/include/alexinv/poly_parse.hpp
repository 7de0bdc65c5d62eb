#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "alexinv/laurent.hpp"

namespace alexinv {

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, const std::vector<std::string> &vars) : s_(text), vars_(vars) {}

    LaurentPolynomial parse() {
        LaurentPolynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void error(const std::string &msg) const {
        fail(ErrorKind::Parse, "polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    LaurentPolynomial constant(const Rational &c) const { return LaurentPolynomial::constant(vars_.size(), c); }

    LaurentPolynomial expr() {
        LaurentPolynomial acc(vars_.size());
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            LaurentPolynomial t = term();
            if (sign < 0) acc -= t;
            else acc += t;
            first = false;
        }
        return acc;
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_];
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                LaurentPolynomial d = factor();
                if (d.size() != 1 || d.constant_term() == 0 || d.terms().begin()->first != Exponent(vars_.size(), 0))
                    error("division is only allowed by nonzero constants");
                acc = Rational(1 / d.constant_term()) * acc;
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                acc = acc * factor(); // implicit product such as 2x or x(y+1)
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPolynomial factor() {
        LaurentPolynomial b = base();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected an exponent");
            long e = std::stol(std::string(s_.substr(start, pos_ - start)));
            if (e > 10000) error("exponent too large");
            if (neg) {
                if (b.size() != 1) error("negative exponents need a monomial base");
                const auto &[ex, c] = *b.terms().begin();
                Exponent ne = ex;
                for (auto &x : ne) x *= -e;
                Rational inv = 1;
                for (long i = 0; i < e; ++i) inv /= c;
                return LaurentPolynomial::monomial(ne, inv);
            }
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    LaurentPolynomial base() {
        skip_ws();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPolynomial inner = expr();
            if (!peek(')')) error("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return LaurentPolynomial::variable(vars_.size(), i);
            // Single-letter variables may be written without '*', e.g. "xy".
            if (name.size() > 1) {
                LaurentPolynomial prod = constant(1);
                for (char ch : name) {
                    std::string one(1, ch);
                    std::size_t k = 0;
                    while (k < vars_.size() && vars_[k] != one) ++k;
                    if (k == vars_.size()) {
                        pos_ = start;
                        error("unknown variable '" + name + "'");
                    }
                    prod = prod * LaurentPolynomial::variable(vars_.size(), k);
                }
                return prod;
            }
            pos_ = start;
            error("unknown variable '" + name + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const std::vector<std::string> &vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses +, -, *, /, ^ (integer exponents), parentheses and implicit
/// products over Q in the given variables.
inline LaurentPolynomial parse_polynomial(std::string_view text, const std::vector<std::string> &vars = {"x", "y"}) {
    return detail::PolyParser(text, vars).parse();
}

/// Print with the given variable names, e.g. "x^2 + y^3".
inline std::string format_polynomial(const LaurentPolynomial &p, const std::vector<std::string> &vars = {"x", "y"}) {
    return p.to_string(vars);
}

} // namespace alexinv
