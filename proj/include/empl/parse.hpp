// ============================================================================
// empl/parse.hpp — concrete syntax for formulas
// ============================================================================
//
// Grammar (EBNF):
//
//   formula := impl
//   impl    := disj ("->" impl)?
//   disj    := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | "[]" unary | "<>" unary | "K[" ident "]" unary
//            | "(" formula ")" | "_|_" | ident
//   ident   := [a-zA-Z][a-zA-Z0-9_]*
//
// "&" and "|" associate left, "->" associates right.  The identifier "K"
// followed by "[" always starts a knowledge operator, so "K" itself is not
// usable as an atom in front of a bracket (it is fine elsewhere).
//
// Errors are reported as ParseError with a 0-based character offset.
//
// ============================================================================

#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "empl/formula.hpp"

namespace empl {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& what)
        : std::runtime_error("at offset " + std::to_string(p) + ": " + what), pos(p) {}
};

namespace detail {

enum class Tok : std::uint8_t {
    Ident, Not, And, Or, Arrow, Box, Diamond, LBrack, RBrack, LParen, RParen, Falsum, End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, "", start};
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_ + 1;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Tok::Ident, src_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        switch (c) {
            case '~': tok_ = {Tok::Not, "~", start}; ++i_; return;
            case '&': tok_ = {Tok::And, "&", start}; ++i_; return;
            case '|': tok_ = {Tok::Or, "|", start}; ++i_; return;
            case '(': tok_ = {Tok::LParen, "(", start}; ++i_; return;
            case ')': tok_ = {Tok::RParen, ")", start}; ++i_; return;
            case ']': tok_ = {Tok::RBrack, "]", start}; ++i_; return;
            case '[':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == ']') {
                    tok_ = {Tok::Box, "[]", start};
                    i_ += 2;
                } else {
                    tok_ = {Tok::LBrack, "[", start};
                    ++i_;
                }
                return;
            case '<':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
                    tok_ = {Tok::Diamond, "<>", start};
                    i_ += 2;
                    return;
                }
                throw ParseError(start, "stray '<' (diamond is written \"<>\")");
            case '-':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
                    tok_ = {Tok::Arrow, "->", start};
                    i_ += 2;
                    return;
                }
                throw ParseError(start, "stray '-' (implication is written \"->\")");
            case '_':
                if (i_ + 2 < src_.size() && src_[i_ + 1] == '|' && src_[i_ + 2] == '_') {
                    tok_ = {Tok::Falsum, "_|_", start};
                    i_ += 3;
                    return;
                }
                throw ParseError(start, "stray '_' (falsum is written \"_|_\")");
            default:
                throw ParseError(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& src, const std::set<std::string>* agents)
        : lex_(src), agents_(agents) {}

    Formula parse() {
        Formula f = impl();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError(t.pos, "trailing input '" + t.text + "'");
        return f;
    }

private:
    Formula impl() {
        Formula lhs = disj();
        if (lex_.peek().kind == Tok::Arrow) {
            lex_.take();
            return Formula::implies(lhs, impl());
        }
        return lhs;
    }

    Formula disj() {
        Formula f = conj();
        while (lex_.peek().kind == Tok::Or) {
            lex_.take();
            f = Formula::disj(f, conj());
        }
        return f;
    }

    Formula conj() {
        Formula f = unary();
        while (lex_.peek().kind == Tok::And) {
            lex_.take();
            f = Formula::conj(f, unary());
        }
        return f;
    }

    Formula unary() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Not: return Formula::neg(unary());
            case Tok::Box: return Formula::box(unary());
            case Tok::Diamond: return Formula::diamond(unary());
            case Tok::Falsum: return Formula::falsum();
            case Tok::LParen: {
                Formula f = impl();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident:
                if (t.text == "K" && lex_.peek().kind == Tok::LBrack) {
                    lex_.take();
                    Token name = expect(Tok::Ident, "agent identifier");
                    if (agents_ && !agents_->count(name.text))
                        throw ParseError(name.pos, "unknown agent id '" + name.text + "'");
                    expect(Tok::RBrack, "']'");
                    return Formula::knows(AgentId{name.text}, unary());
                }
                return Formula::atom(t.text);
            default:
                throw ParseError(t.pos, "expected a formula, found '" + t.text + "'");
        }
    }

    Token expect(Tok k, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != k) throw ParseError(t.pos, "expected " + what + ", found '" + t.text + "'");
        return t;
    }

    Lexer lex_;
    const std::set<std::string>* agents_;
};

}  // namespace detail

// Parses `text`.  When `agents` is given, K[x] with x outside the set is an
// "unknown agent id" error; otherwise any identifier is accepted as an agent.
inline Formula parse_formula(const std::string& text, const std::set<std::string>* agents = nullptr) {
    return detail::Parser(text, agents).parse();
}

}  // namespace empl
