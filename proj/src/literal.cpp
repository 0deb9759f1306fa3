#include <cctype>
#include <optional>

#include "valparam/error.hpp"
#include "valparam/poly.hpp"

namespace valparam {

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
public:
    Parser(const FieldSpec& field, std::string_view text) : field_(field), text_(text) {}

    PolyK parse() {
        PolyK f = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Int integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Int(std::string(text_.substr(start, pos_ - start)));
    }

    PolyK constant(const KElem& c) { return PolyK::constant(c); }

    PolyK expr() {
        PolyK acc = term();
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    PolyK term() {
        PolyK acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                PolyK d = unary();
                if (d.degree() > 0) fail("division by a non-constant polynomial");
                if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in '" + std::string(text_) + "'");
                acc = acc.scaled(KElem::from_int(field_, 1) / d.leading());
            } else {
                return acc;
            }
        }
    }

    PolyK unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    // Rational exponent after '^': n, -n, (n), (-n/m).
    Rat exponent() {
        if (accept('(')) {
            bool neg = accept('-');
            Int num = integer();
            Int den(1);
            if (accept('/')) den = integer();
            expect(')');
            if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in exponent");
            return make_rat(neg ? Int(-num) : num, den);
        }
        bool neg = accept('-');
        Int n = integer();
        return Rat(neg ? Int(-n) : n);
    }

    PolyK power() {
        bool bare_t = false;
        PolyK base = atom(bare_t);
        if (!accept('^')) return base;
        Rat e = exponent();
        if (bare_t) return constant(KElem::t_power(field_, e));
        if (!is_integer(e)) fail("fractional exponent on something other than t");
        if (abs(e.get_num()) > kMaxExponent) fail("exponent too large");
        long n = e.get_num().get_si();
        if (n >= 0) return poly_pow(base, static_cast<unsigned>(n));
        if (base.degree() > 0) fail("negative power of a non-constant polynomial");
        if (base.is_zero()) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return constant(k_pow(base.leading(), n));
    }

    PolyK atom(bool& bare_t) {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(KElem::from_rat(field_, Rat(integer())));
        if (c == 't') {
            ++pos_;
            if (field_.kind() == FieldSpec::Kind::RatP) fail("'t' is not an element of Q");
            bare_t = true;
            return constant(KElem::t_power(field_, Rat(1)));
        }
        if (c == 'x') {
            ++pos_;
            return PolyK::x(field_);
        }
        if (accept('(')) {
            PolyK inner = expr();
            expect(')');
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const FieldSpec& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyK parse_poly(const FieldSpec& field, std::string_view text) { return Parser(field, text).parse(); }

KElem parse_elem(const FieldSpec& field, std::string_view text) {
    PolyK f = parse_poly(field, text);
    if (f.degree() > 0) throw Error(ErrorKind::Parse, "'" + std::string(text) + "' depends on x");
    return f.coeff(0);
}

}  // namespace valparam
