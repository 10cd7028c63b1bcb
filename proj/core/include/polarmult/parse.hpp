#pragma once

#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "polarmult/errors.hpp"
#include "polarmult/xpoly.hpp"

namespace polarmult {

// Polynomial grammar shared by the CLI and the serialized fixture format:
// integer literals, declared variable names, operators + - * ^, parentheses;
// whitespace ignored; ^ binds tighter than *, * tighter than + and -.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)*
//   atom   := integer | variable | '(' expr ')' | '-' atom
namespace parser_detail {

struct Token {
    enum class Kind { integer, name, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line;
    int col;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(1);
            continue;
        }
        int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back(Token{Token::Kind::integer, src.substr(i, j - i), tl, tc});
            bump(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back(Token{Token::Kind::name, src.substr(i, j - i), tl, tc});
            bump(j - i);
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Kind::plus; break;
        case '-': k = Token::Kind::minus; break;
        case '*': k = Token::Kind::star; break;
        case '^': k = Token::Kind::caret; break;
        case '(': k = Token::Kind::lparen; break;
        case ')': k = Token::Kind::rparen; break;
        default:
            throw ParseError("unexpected character", line, col, std::string(1, c));
        }
        out.push_back(Token{k, std::string(1, c), tl, tc});
        bump(1);
    }
    out.push_back(Token{Token::Kind::end, "", line, col});
    return out;
}

} // namespace parser_detail

// Parses a polynomial over the declared base and graded variables into an
// element of kappa[u][x]. Base-only contexts pass an empty xvar list.
template <class F>
class PolyParser {
  public:
    PolyParser(const F& f, std::vector<std::string> uvars, std::vector<std::string> xvars)
        : f_(f), uvars_(std::move(uvars)), xvars_(std::move(xvars)) {
        for (std::size_t i = 0; i < uvars_.size(); ++i)
            index_[uvars_[i]] = {true, i};
        for (std::size_t i = 0; i < xvars_.size(); ++i) {
            if (index_.count(xvars_[i]))
                throw InputError("variable name '" + xvars_[i] + "' declared twice");
            index_[xvars_[i]] = {false, i};
        }
    }

    GradedPoly<F> parse(const std::string& src) {
        toks_ = parser_detail::tokenize(src);
        pos_ = 0;
        auto p = expr();
        expect(parser_detail::Token::Kind::end, "end of input");
        return p;
    }

    BasePoly<F> parse_base(const std::string& src) {
        auto p = parse(src);
        BasePoly<F> r;
        for (const auto& t : p.terms) {
            if (!t.xmono.is_one())
                throw InputError("graded variables are not allowed here: '" + src + "'");
            r = poly_add(f_, r, t.coeff);
        }
        return r;
    }

  private:
    using Token = parser_detail::Token;

    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k)
            throw ParseError("expected " + what, cur().line, cur().col, cur().text.empty() ? "<end>" : cur().text);
        advance();
    }

    GradedPoly<F> one() const {
        GradedPoly<F> p;
        p.terms.push_back(XTerm<F>{Mono(xvars_.size()), BasePoly<F>::constant(f_, f_.one(), uvars_.size())});
        return p;
    }

    GradedPoly<F> expr() {
        bool neg = false;
        if (cur().kind == Token::Kind::minus) {
            neg = true;
            advance();
        }
        auto acc = term();
        if (neg)
            acc = xpoly_neg(f_, acc);
        while (cur().kind == Token::Kind::plus || cur().kind == Token::Kind::minus) {
            bool minus = cur().kind == Token::Kind::minus;
            advance();
            auto rhs = term();
            acc = xpoly_add(f_, acc, minus ? xpoly_neg(f_, rhs) : rhs);
        }
        return acc;
    }

    GradedPoly<F> term() {
        auto acc = factor();
        while (cur().kind == Token::Kind::star) {
            advance();
            acc = xpoly_mul(f_, acc, factor());
        }
        return acc;
    }

    GradedPoly<F> factor() {
        auto base = atom();
        while (cur().kind == Token::Kind::caret) {
            advance();
            if (cur().kind != Token::Kind::integer)
                throw ParseError("exponent must be a nonnegative integer literal", cur().line, cur().col, cur().text);
            long e = std::strtol(cur().text.c_str(), nullptr, 10);
            advance();
            auto acc = one();
            for (long k = 0; k < e; ++k)
                acc = xpoly_mul(f_, acc, base);
            base = acc;
        }
        return base;
    }

    GradedPoly<F> atom() {
        const Token& t = cur();
        switch (t.kind) {
        case Token::Kind::integer: {
            long v = std::strtol(t.text.c_str(), nullptr, 10);
            advance();
            GradedPoly<F> p;
            auto c = BasePoly<F>::constant(f_, f_.from_int(v), uvars_.size());
            if (!c.is_zero())
                p.terms.push_back(XTerm<F>{Mono(xvars_.size()), std::move(c)});
            return p;
        }
        case Token::Kind::name: {
            auto it = index_.find(t.text);
            if (it == index_.end())
                throw ParseError("unknown variable", t.line, t.col, t.text);
            advance();
            GradedPoly<F> p;
            if (it->second.first) {
                Mono m(uvars_.size());
                m.e[it->second.second] = 1;
                p.terms.push_back(XTerm<F>{Mono(xvars_.size()), BasePoly<F>::term(f_, m, f_.one())});
            } else {
                Mono xm(xvars_.size());
                xm.e[it->second.second] = 1;
                p.terms.push_back(XTerm<F>{xm, BasePoly<F>::constant(f_, f_.one(), uvars_.size())});
            }
            return p;
        }
        case Token::Kind::lparen: {
            advance();
            auto p = expr();
            expect(Token::Kind::rparen, "')'");
            return p;
        }
        case Token::Kind::minus: {
            advance();
            return xpoly_neg(f_, atom());
        }
        default:
            throw ParseError("expected a literal, variable, or '('", t.line, t.col,
                             t.text.empty() ? "<end>" : t.text);
        }
    }

    const F& f_;
    std::vector<std::string> uvars_;
    std::vector<std::string> xvars_;
    std::map<std::string, std::pair<bool, std::size_t>> index_; // name -> (is_base, idx)
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace polarmult
