#pragma once

// Recursive-descent parser for the expression grammar:
//
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := '-' factor | power
//   power   := atom ('^' integer)?
//   atom    := number | 'pi' | 'x'digits | func '(' expr ')'
//             | 'complex' '(' number ',' number ')' | '(' expr ')'
//   func    := 'sin' | 'cos' | 'sinh' | 'cosh'
//   number  := digits ('.' digits)? | '.' digits
//
// Numbers (including decimals) are exact rationals.  Division requires a
// constant divisor: rational divisors fold exactly, any other constant
// expression (e.g. sinh(-1) or pi) folds to a numeric constant, and a
// divisor containing a variable is an error.

#include <cctype>
#include <stdexcept>
#include <string>

#include "lidstone/expr.hpp"

namespace lidstone {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& message, std::size_t pos)
        : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

namespace parsedetail {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr parse() {
        skip_ws();
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    Expr parse_expr() {
        std::vector<Expr> terms{parse_term()};
        while (true) {
            skip_ws();
            if (accept('+')) {
                terms.push_back(parse_term());
            } else if (accept('-')) {
                terms.push_back(make_product({make_rational(-1), parse_term()}));
            } else {
                break;
            }
        }
        return make_sum(std::move(terms));
    }

    Expr parse_term() {
        Expr acc = parse_factor();
        while (true) {
            skip_ws();
            if (accept('*')) {
                acc = make_product({acc, parse_factor()});
            } else if (accept('/')) {
                std::size_t at = pos_;
                Expr divisor = parse_factor();
                acc = make_product({acc, reciprocal(divisor, at)});
            } else {
                break;
            }
        }
        return acc;
    }

    Expr parse_factor() {
        skip_ws();
        if (accept('-')) return make_product({make_rational(-1), parse_factor()});
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        skip_ws();
        if (!accept('^')) return base;
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError("exponent must be a nonnegative integer literal", at);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000) throw ParseError("exponent too large", at);
            ++pos_;
        }
        return make_intpow(base, static_cast<int>(v));
    }

    Expr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("expected expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return make_rational(parse_number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                word += text_[pos_];
                ++pos_;
            }
            if (word == "pi") return make_pi_multiple(1);
            if (word == "sin" || word == "cos" || word == "sinh" || word == "cosh") {
                expect('(');
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == ')')
                    throw ParseError("function '" + word + "' needs an argument", pos_);
                Expr arg = parse_expr();
                expect(')');
                if (word == "sin") return make_sin(arg);
                if (word == "cos") return make_cos(arg);
                if (word == "sinh") return make_sinh(arg);
                return make_cosh(arg);
            }
            if (word == "complex") {
                expect('(');
                Rational re = parse_signed_number();
                expect(',');
                Rational im = parse_signed_number();
                expect(')');
                return make_complex(Complex(to_double(re), to_double(im)));
            }
            if (word.size() >= 2 && word[0] == 'x') {
                bool digits = true;
                for (std::size_t i = 1; i < word.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(word[i]))) digits = false;
                if (digits) {
                    int idx = std::stoi(word.substr(1));
                    if (idx < 1) throw ParseError("variable index must be >= 1", at);
                    return make_var(idx);
                }
            }
            throw ParseError("unknown identifier '" + word + "'", at);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Rational parse_number() {
        std::size_t at = pos_;
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            digits += text_[pos_];
            ++pos_;
        }
        std::string frac;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                frac += text_[pos_];
                ++pos_;
            }
        }
        if (digits.empty() && frac.empty()) throw ParseError("expected number", at);
        BigInt whole = digits.empty() ? BigInt(0) : BigInt(digits);
        Rational value(whole);
        if (!frac.empty()) {
            BigInt num(frac);
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            value += Rational(num, den);
        }
        return value;
    }

    Rational parse_signed_number() {
        skip_ws();
        bool neg = accept('-');
        skip_ws();
        Rational v = parse_number();
        return neg ? Rational(-v) : v;
    }

    Expr reciprocal(const Expr& divisor, std::size_t at) {
        if (contains_var(divisor)) throw ParseError("division by a non-constant expression", at);
        if (divisor->kind == ExprKind::RationalConst) {
            if (divisor->rat == 0) throw ParseError("division by zero", at);
            return make_rational(Rational(1) / divisor->rat);
        }
        Complex v = eval_numeric(divisor, {});
        if (v == Complex(0.0, 0.0)) throw ParseError("division by zero", at);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ParseError("division by a non-finite constant", at);
        return make_complex(Complex(1.0, 0.0) / v);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace parsedetail

inline Expr parse_expression(const std::string& text) { return parsedetail::Parser(text).parse(); }

}  // namespace lidstone
