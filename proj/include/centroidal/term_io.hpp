#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/term.hpp"

namespace centroidal {

namespace detail {

enum class Tok {
    kw_t, kw_f, kw_if, kw_then, kw_else, kw_not, kw_pi1,
    variable, integer, plus_hat,
    lbrace, rbrace, lparen, rparen,
    star_op, plus_op, minus_op, slash,
    end,
};

struct Token {
    Tok kind;
    std::size_t pos;
    long long value = 0;  // variable index or integer literal
};

inline std::vector<Token> lex_term(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto push = [&](Tok k, std::size_t p, long long v = 0) { out.push_back({k, p, v}); };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        std::size_t p = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            std::string w = s.substr(i, j - i);
            i = j;
            if (w == "T") push(Tok::kw_t, p);
            else if (w == "F") push(Tok::kw_f, p);
            else if (w == "if") push(Tok::kw_if, p);
            else if (w == "then") push(Tok::kw_then, p);
            else if (w == "else") push(Tok::kw_else, p);
            else if (w == "not") push(Tok::kw_not, p);
            else if (w == "pi1") push(Tok::kw_pi1, p);
            else if (w[0] == 'x' && w.size() > 1 &&
                     w.find_first_not_of("0123456789", 1) == std::string::npos)
                push(Tok::variable, p, std::stoll(w.substr(1)));
            else
                throw SyntaxError(p, "unknown word '" + w + "'");
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                v = v * 10 + (s[i++] - '0');
            push(Tok::integer, p, v);
            continue;
        }
        switch (c) {
            case '^':
                if (i + 1 < s.size() && s[i + 1] == '+') { push(Tok::plus_hat, p); i += 2; }
                else throw SyntaxError(p, "expected '^+'");
                break;
            case '{': push(Tok::lbrace, p); ++i; break;
            case '}': push(Tok::rbrace, p); ++i; break;
            case '(': push(Tok::lparen, p); ++i; break;
            case ')': push(Tok::rparen, p); ++i; break;
            case '*': push(Tok::star_op, p); ++i; break;
            case '+': push(Tok::plus_op, p); ++i; break;
            case '-': push(Tok::minus_op, p); ++i; break;
            case '/': push(Tok::slash, p); ++i; break;
            default:
                throw SyntaxError(p, std::string("unexpected character '") + c + "'");
        }
    }
    push(Tok::end, s.size());
    return out;
}

class TermParser {
  public:
    TermParser(const std::string& text, int arity, const FieldSpec& field)
        : toks_(lex_term(text)), arity_(arity), field_(field) {}

    TermPtr parse() {
        TermPtr t = term();
        expect(Tok::end, "end of input");
        return t;
    }

  private:
    TermPtr term() {
        switch (peek().kind) {
            case Tok::kw_if: {
                next();
                TermPtr c = term();
                expect(Tok::kw_then, "'then'");
                TermPtr a = term();
                expect(Tok::kw_else, "'else'");
                TermPtr b = term();
                return ite(std::move(c), std::move(a), std::move(b));
            }
            case Tok::kw_not:
                next();
                return bnot(term());
            case Tok::kw_pi1:
                next();
                return pi1(term());
            default:
                return postfix();
        }
    }

    TermPtr postfix() {
        TermPtr t = atom();
        while (peek().kind == Tok::plus_hat) {
            next();
            t = plus(std::move(t));
        }
        return t;
    }

    TermPtr atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::kw_t: next(); return tt();
            case Tok::kw_f: next(); return ff();
            case Tok::variable: {
                next();
                if (tok.value < 1 || tok.value > arity_)
                    throw VarOutOfRangeError("x" + std::to_string(tok.value) +
                                             " out of range for arity " + std::to_string(arity_));
                return var(static_cast<int>(tok.value));
            }
            case Tok::lparen: {
                next();
                TermPtr a = term();
                expect(Tok::star_op, "'*'");
                TermPtr b = term();
                expect(Tok::rparen, "')'");
                return star(std::move(a), std::move(b));
            }
            case Tok::lbrace: {
                next();
                AffineParts parts;
                bool neg = false;
                if (peek().kind == Tok::minus_op) { next(); neg = true; }
                parts.emplace_back(coefficient(neg));
                while (peek().kind == Tok::plus_op || peek().kind == Tok::minus_op) {
                    bool n = next().kind == Tok::minus_op;
                    parts.emplace_back(coefficient(n));
                }
                expect(Tok::rbrace, "'}'");
                return affine(std::move(parts));
            }
            default:
                throw SyntaxError(tok.pos, "expected a term");
        }
    }

    AffinePart coefficient(bool negate) {
        const Token& tok = peek();
        if (tok.kind != Tok::integer) throw SyntaxError(tok.pos, "expected a coefficient");
        next();
        Scalar c = Scalar::from_int(tok.value, field_);
        if (peek().kind == Tok::slash) {
            next();
            const Token& d = peek();
            if (d.kind != Tok::integer) throw SyntaxError(d.pos, "expected a denominator");
            next();
            Scalar den = Scalar::from_int(d.value, field_);
            if (den.is_zero()) throw SyntaxError(d.pos, "zero denominator");
            c = c / den;
        }
        if (negate) c = -c;
        if (peek().kind == Tok::star_op) next();
        return {c, term()};
    }

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    void expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw SyntaxError(peek().pos, std::string("expected ") + what);
        next();
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    int arity_;
    FieldSpec field_;
};

}  // namespace detail

// Parse the term grammar:
//   term := 'if' term 'then' term 'else' term | 'not' term | 'pi1' term | postfix
//   postfix := atom ('^+')*
//   atom := 'T' | 'F' | x<INT> | '(' term '*' term ')' | '{' affine '}'
//   affine := ['-'] coef ['*']? term (('+'|'-') coef ['*']? term)*
// Whitespace-insensitive; '#' starts a line comment. Affine blocks must sum
// to 1 and variable indices must lie in 1..n.
inline TermPtr parse_term(const std::string& text, int n, const FieldSpec& field) {
    return detail::TermParser(text, n, field).parse();
}

namespace detail {

// ^+ may directly follow only a self-delimiting production.
inline bool postfixable(TermKind k) {
    switch (k) {
        case TermKind::const_true:
        case TermKind::const_false:
        case TermKind::var:
        case TermKind::star:
        case TermKind::affine:
        case TermKind::plus:
            return true;
        default:
            return false;
    }
}

}  // namespace detail

// Canonical text for a term; parse_term(print_term(t)) == t structurally for
// every kind except const_scalar, which has no literal syntax of its own and
// prints as its affine expansion {a T + (1-a) F}.
inline std::string print_term(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::const_true: return "T";
        case TermKind::const_false: return "F";
        case TermKind::var: return "x" + std::to_string(t->var_index());
        case TermKind::if_else:
            return "if " + print_term(t->child(0)) + " then " + print_term(t->child(1)) +
                   " else " + print_term(t->child(2));
        case TermKind::not_op: return "not " + print_term(t->child(0));
        case TermKind::pi1: return "pi1 " + print_term(t->child(0));
        case TermKind::star:
            return "(" + print_term(t->child(0)) + " * " + print_term(t->child(1)) + ")";
        case TermKind::plus: {
            const TermPtr& c = t->child(0);
            if (detail::postfixable(c->kind())) return print_term(c) + "^+";
            return "{1 " + print_term(c) + "}^+";  // {1 t} re-parses as t
        }
        case TermKind::const_scalar: {
            const Scalar& a = t->scalar_value();
            Scalar b = Scalar::one(a.field()) - a;
            return print_term(affine({{a, tt()}, {b, ff()}}));
        }
        case TermKind::affine: {
            std::string out = "{";
            bool first = true;
            for (const auto& [c, u] : t->parts()) {
                bool neg = c.field().is_rationals() && c.rational_value() < 0;
                Scalar mag = neg ? -c : c;
                if (first) {
                    if (neg) out += "-";
                    first = false;
                } else {
                    out += neg ? " - " : " + ";
                }
                out += mag.to_string() + " " + print_term(u);
            }
            return out + "}";
        }
    }
    throw Error("print_term: unknown term kind");
}

}  // namespace centroidal
