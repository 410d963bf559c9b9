#pragma once

// Product expressions over curves, eta and Laurent scalars.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | factor
//   factor  := curve | "T'(0,0)" | 'eta' ['^' int] | int | 't' ['^' ['-'] int] | '(' expr ')'
//   curve   := '(' ['-'] int ',' ['-'] int ')' ['_T']
//
// '*' is evaluated left to right; the algebra is not commutative.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"
#include "errors.hpp"
#include "product.hpp"

namespace skein {

struct Expression {
    enum class Kind { Curve, Unit, Eta, Integer, TPower, Neg, Add, Sub, Mul };

    Kind kind = Kind::Integer;
    Vec2 curve{};     // Curve
    Int power = 0;    // Eta degree or t exponent
    BigInt integer;   // Integer
    std::vector<Expression> args;

    friend bool operator==(const Expression&, const Expression&) = default;
};

namespace detail {

// Coordinates are capped so determinants and sums stay well inside 64 bits.
inline constexpr Int kMaxCoordinate = Int{1} << 30;

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view src) : s_(src) {}

    Expression parse_all() {
        skip();
        if (at_end()) throw SyntaxError(pos_, "empty expression");
        Expression e = expr();
        skip();
        if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (peek() != c) {
            throw SyntaxError(pos_, std::string("expected '") + c + "'" +
                                        (at_end() ? " before end of input" : ""));
        }
        ++pos_;
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected an integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    Int small_int(bool allow_sign) {
        skip();
        const std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            ++pos_;
            skip();
        }
        const std::string d = digits();
        const BigInt v(d);
        if (v > BigInt(kMaxCoordinate)) {
            throw SemanticError(start, "integer " + d + " is out of range");
        }
        const Int r = static_cast<Int>(v);
        return neg ? -r : r;
    }

    // After '(' : does the input continue as "[-]int ,"?
    [[nodiscard]] bool looks_like_curve() const {
        std::size_t i = pos_;
        auto ws = [&] {
            while (i < s_.size() && std::isspace(static_cast<unsigned char>(s_[i]))) ++i;
        };
        ws();
        if (i < s_.size() && (s_[i] == '-' || s_[i] == '+')) {
            ++i;
            ws();
        }
        const std::size_t d0 = i;
        while (i < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i]))) ++i;
        if (i == d0) return false;
        ws();
        return i < s_.size() && s_[i] == ',';
    }

    Expression expr() {
        Expression lhs = term();
        while (true) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            Expression rhs = term();
            lhs = binary(c == '+' ? Expression::Kind::Add : Expression::Kind::Sub,
                         std::move(lhs), std::move(rhs));
        }
    }

    Expression term() {
        Expression lhs = unary();
        while (true) {
            skip();
            if (peek() != '*') return lhs;
            ++pos_;
            Expression rhs = unary();
            lhs = binary(Expression::Kind::Mul, std::move(lhs), std::move(rhs));
        }
    }

    Expression unary() {
        skip();
        if (peek() == '-') {
            ++pos_;
            Expression e;
            e.kind = Expression::Kind::Neg;
            e.args.push_back(unary());
            return e;
        }
        return factor();
    }

    Expression factor() {
        skip();
        const std::size_t start = pos_;
        if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            if (looks_like_curve()) return curve_tail(start);
            Expression inner = expr();
            expect(')');
            return inner;
        }
        if (s_.substr(pos_, 2) == "T'") {
            pos_ += 2;
            expect('(');
            const Int p = small_int(true);
            expect(',');
            const Int q = small_int(true);
            expect(')');
            if (p != 0 || q != 0) {
                throw SemanticError(start, "T'(p,q) is only accepted for the unit T'(0,0)");
            }
            Expression e;
            e.kind = Expression::Kind::Unit;
            return e;
        }
        if (s_.substr(pos_, 3) == "eta") {
            pos_ += 3;
            Expression e;
            e.kind = Expression::Kind::Eta;
            e.power = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                e.power = small_int(false);
            }
            return e;
        }
        if (c == 't') {
            ++pos_;
            Expression e;
            e.kind = Expression::Kind::TPower;
            e.power = 1;
            skip();
            if (peek() == '^') {
                ++pos_;
                e.power = small_int(true);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expression e;
            e.kind = Expression::Kind::Integer;
            e.integer = BigInt(digits());
            return e;
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Expression curve_tail(std::size_t open) {
        const Int p = small_int(true);
        expect(',');
        const Int q = small_int(true);
        expect(')');
        if (s_.substr(pos_, 2) == "_T") pos_ += 2;
        if (p == 0 && q == 0) {
            throw SemanticError(open, "(0,0) is not a curve; write 2 or T'(0,0)");
        }
        Expression e;
        e.kind = Expression::Kind::Curve;
        e.curve = {p, q};
        return e;
    }

    static Expression binary(Expression::Kind k, Expression a, Expression b) {
        Expression e;
        e.kind = k;
        e.args.push_back(std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline int precedence(const Expression& e) {
    switch (e.kind) {
        case Expression::Kind::Add:
        case Expression::Kind::Sub: return 1;
        case Expression::Kind::Mul: return 2;
        case Expression::Kind::Neg: return 3;
        default: return 4;
    }
}

}  // namespace detail

inline Expression parse_expression(std::string_view src) {
    return detail::ExpressionParser(src).parse_all();
}

/// Canonical printing; parse_expression(to_string(e)) == e.
inline std::string to_string(const Expression& e) {
    using K = Expression::Kind;
    auto wrap = [](const Expression& sub, int min_prec) {
        const std::string s = to_string(sub);
        return detail::precedence(sub) < min_prec ? "(" + s + ")" : s;
    };
    switch (e.kind) {
        case K::Curve: return to_string(e.curve);
        case K::Unit: return "T'(0,0)";
        case K::Eta: return e.power == 1 ? "eta" : "eta^" + std::to_string(e.power);
        case K::Integer: return e.integer.str();
        case K::TPower: return e.power == 1 ? "t" : "t^" + std::to_string(e.power);
        case K::Neg: return "-" + wrap(e.args[0], 3);
        case K::Add: return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
        case K::Sub: return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
        case K::Mul: return wrap(e.args[0], 2) + "*" + wrap(e.args[1], 3);
    }
    return {};
}

inline SkeinElement evaluate(const Expression& e) {
    using K = Expression::Kind;
    switch (e.kind) {
        case K::Curve: return SkeinElement::from_raw(e.curve);
        case K::Unit: return SkeinElement::scalar(1);
        case K::Eta: return SkeinElement::eta(e.power);
        case K::Integer: return SkeinElement::scalar(LaurentPoly(e.integer, 0));
        case K::TPower: return SkeinElement::scalar(LaurentPoly::t_power(e.power));
        case K::Neg: return -evaluate(e.args[0]);
        case K::Add: return evaluate(e.args[0]) + evaluate(e.args[1]);
        case K::Sub: return evaluate(e.args[0]) - evaluate(e.args[1]);
        case K::Mul: return multiply(evaluate(e.args[0]), evaluate(e.args[1]));
    }
    return {};
}

inline SkeinElement evaluate(std::string_view src) { return evaluate(parse_expression(src)); }

}  // namespace skein
