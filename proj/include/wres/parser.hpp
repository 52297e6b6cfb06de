#pragma once

#include "wres/clifford.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace wres {

struct ParseError : std::runtime_error {
    int column;  // 1-based
    ParseError(const std::string& what, int col)
        : std::runtime_error(what + " at column " + std::to_string(col)), column(col) {}
};

/// Recursive-descent parser for the expression mini-language:
///   atoms   c(i), ch(i), xi(i), xin, i, hp (alias h'(0)), t, tbar, pi,
///           Omega, K, rational literals p/q, trace(expr)
///   ops     * + - ^ and parentheses; products are left-associative
/// Values are Clifford elements over xi-polynomials; scalars embed as the
/// empty word.
class ExprParser {
  public:
    ExprParser(std::string text, int dimension, const PairingForm& pf)
        : text_(std::move(text)), n_(dimension), pf_(pf) {}

    CliffordElement parse() {
        pos_ = 0;
        CliffordElement e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", col());
        return e;
    }

  private:
    int col() const { return static_cast<int>(pos_) + 1; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", col());
        ++pos_;
    }

    CliffordElement parse_expr() {
        CliffordElement acc = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (peek_minus_binary())
                acc -= (eat('-'), parse_term());
            else
                return acc;
        }
    }

    bool peek_minus_binary() {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == '-';
    }

    CliffordElement parse_term() {
        CliffordElement acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                acc = acc.multiply(parse_factor(), pf_);
            else
                return acc;
        }
    }

    CliffordElement parse_factor() {
        CliffordElement base = parse_atom();
        skip_ws();
        if (eat('^')) {
            int e = parse_uint("exponent");
            CliffordElement acc{XiPoly(1)};
            for (int k = 0; k < e; ++k)
                acc = acc.multiply(base, pf_);
            return acc;
        }
        return base;
    }

    int parse_uint(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(std::string("expected ") + what, col());
        return std::stoi(text_.substr(start, pos_ - start));
    }

    CliffordElement parse_atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", col());
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return parse_atom().scaled(GaussRat(-1));
        }
        if (c == '(') {
            ++pos_;
            CliffordElement e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CliffordElement{XiPoly(parse_rational())};
        if (std::isalpha(static_cast<unsigned char>(c)))
            return parse_ident();
        throw ParseError("unexpected character", col());
    }

    Rat parse_rational() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        BigInt num(text_.substr(start, pos_ - start));
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == dstart)
                throw ParseError("expected denominator", col());
            return Rat(num, BigInt(text_.substr(dstart, pos_ - dstart)));
        }
        return Rat(num);
    }

    int parse_index(const std::string& name, bool allow_n) {
        expect('(');
        int idx = parse_uint("index");
        expect(')');
        int bound = allow_n ? n_ : n_ - 1;
        if (idx < 1 || idx > bound)
            throw ParseError("index out of range for " + name + " in dimension " +
                                 std::to_string(n_),
                             col());
        return idx;
    }

    CliffordElement parse_ident() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string id = text_.substr(start, pos_ - start);
        // the h'(0) token
        if (id == "h" && pos_ < text_.size() && text_[pos_] == '\'') {
            ++pos_;
            expect('(');
            if (!eat('0'))
                throw ParseError("expected h'(0)", col());
            expect(')');
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::Hp))};
        }
        if (id == "c")
            return cliff_gen(gen_c(parse_index(id, true)));
        if (id == "ch")
            return cliff_gen(gen_chat(parse_index(id, true)));
        if (id == "xi")
            return CliffordElement{XiPoly::var(parse_index(id, true))};
        if (id == "xin")
            return CliffordElement{XiPoly::var(n_)};
        if (id == "i")
            return CliffordElement{XiPoly(GaussRat::i())};
        if (id == "t")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::T))};
        if (id == "tbar")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::Tbar))};
        if (id == "hp")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::Hp))};
        if (id == "pi")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::Pi))};
        if (id == "Omega")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::Omega))};
        if (id == "K")
            return CliffordElement{XiPoly(ScalarExpr::token(Sym::K))};
        if (id == "trace") {
            expect('(');
            CliffordElement inner = parse_expr();
            expect(')');
            return CliffordElement{inner.trace(pf_)};
        }
        throw ParseError("unknown identifier '" + id + "'",
                         static_cast<int>(start) + 1);
    }

    std::string text_;
    size_t pos_ = 0;
    int n_;
    const PairingForm& pf_;
};

inline CliffordElement parse_expr(const std::string& text, int n, const PairingForm& pf) {
    return ExprParser(text, n, pf).parse();
}

/// Parses a text that must denote a pure scalar expression (no Clifford
/// words, no xi variables), e.g. a report coefficient.
inline ScalarExpr parse_scalar_expr(const std::string& text, int n, const PairingForm& pf) {
    CliffordElement e = parse_expr(text, n, pf);
    if (!e.is_scalar())
        throw ParseError("expected a scalar expression", 1);
    XiPoly p = e.scalar_part();
    if (!p.is_constant())
        throw ParseError("expected a xi-free expression", 1);
    return p.constant_part();
}

} // namespace wres
