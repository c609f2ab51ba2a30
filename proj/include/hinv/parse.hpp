#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hinv/poly.hpp"

namespace hinv {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Recursive-descent parser for the polynomial grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := rat | [rat '*'] factor ('*' factor)*
//   factor := var ['^' int]
//   rat    := int ['/' posint]
// Coordinates are exactly x0..x{n-1}; any other identifier must be a declared
// parameter. Exponents may be negative only on parameters. Whitespace is
// insignificant.
class PolyParser {
public:
    PolyParser(std::string_view text, const VarSpace& vs) : text_(text), vs_(vs) {}

    Poly parse() {
        Poly result(vs_);
        skip_ws();
        bool negative = accept('-');
        result += parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = text_[pos_];
            if (op != '+' && op != '-') throw parse_error("expected '+' or '-'", pos_);
            ++pos_;
            skip_ws();
            result += parse_term(op == '-');
            skip_ws();
        }
        return result;
    }

private:
    Poly parse_term(bool negative) {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("expected term", pos_);
        Rational coeff = 1;
        bool have_factor = false;
        Monomial mono{std::vector<int>(vs_.n(), 0), {}};

        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_rat();
            skip_ws();
            if (!accept('*')) {
                // bare rational constant
                return Poly::constant(vs_, negative ? -coeff : coeff);
            }
            skip_ws();
        }
        for (;;) {
            parse_factor(mono);
            have_factor = true;
            skip_ws();
            if (!accept('*')) break;
            skip_ws();
        }
        if (!have_factor) throw parse_error("expected variable", pos_);
        Poly t(vs_);
        t.add_term(std::move(mono), negative ? -coeff : coeff);
        return t;
    }

    void parse_factor(Monomial& mono) {
        std::size_t start = pos_;
        std::string name = parse_identifier();
        int exp = 1;
        if (accept('^')) exp = parse_int();
        int ci = vs_.coord_of(name);
        if (ci >= 0) {
            if (exp < 0) throw parse_error("negative exponent on coordinate " + name, start);
            mono.coord[ci] += exp;
            return;
        }
        int pi = vs_.param_index(name);
        if (pi < 0) throw parse_error("unknown variable '" + name + "'", start);
        if (exp != 0) {
            int v = (mono.param.count(pi) ? mono.param[pi] : 0) + exp;
            if (v == 0)
                mono.param.erase(pi);
            else
                mono.param[pi] = v;
        }
    }

    std::string parse_identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() ||
            (!std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '_'))
            throw parse_error("expected variable", pos_);
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational parse_rat() {
        Integer num = parse_integer();
        if (accept('/')) {
            std::size_t dpos = pos_;
            Integer den = parse_integer();
            if (den <= 0) throw parse_error("denominator must be positive", dpos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = accept('-');
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected integer", pos_);
        std::string digits;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            digits += text_[pos_++];
        (void)start;
        Integer v(digits);
        return neg ? Integer(-v) : v;
    }

    int parse_int() {
        Integer v = parse_integer();
        if (v > 1000000 || v < -1000000) throw parse_error("exponent out of range", pos_);
        return static_cast<int>(v);
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    const VarSpace& vs_;
    std::size_t pos_ = 0;
};

inline Poly parse_poly(std::string_view text, const VarSpace& vs) {
    return PolyParser(text, vs).parse();
}

}  // namespace hinv
