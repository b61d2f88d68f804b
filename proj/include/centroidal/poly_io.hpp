#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/poly.hpp"

namespace centroidal {

// Text form, leading monomial first: `2*X1^2*X4 - 1/3*X2 + 1`. Passing
// variable_names overrides the default X1..Xn labels.
inline std::string to_string(const Poly& p, const std::vector<std::string>& variable_names = {}) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = c.field().is_rationals() && c.rational_value() < 0;
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int i = 0; i < p.num_vars(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < static_cast<int>(variable_names.size()) ? variable_names[i]
                                                                : "X" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

inline std::string to_string(const PolyPair& pp, const std::vector<std::string>& variable_names = {}) {
    return "(" + to_string(pp.p1, variable_names) + ", " + to_string(pp.p2, variable_names) + ")";
}

namespace detail {

// One parsed additive term before the variable count is known.
struct RawTerm {
    std::map<int, std::uint32_t> exps;  // 0-based variable index -> exponent
    Scalar coeff;
};

class PolyParser {
  public:
    PolyParser(const std::string& text, const FieldSpec& field) : s_(text), field_(field) {}

    std::vector<RawTerm> parse_sum() {
        std::vector<RawTerm> terms;
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        terms.push_back(parse_term(neg));
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            bool n = get() == '-';
            terms.push_back(parse_term(n));
            skip_ws();
        }
        return terms;
    }

    int max_var() const { return max_var_; }
    std::size_t position() const { return pos_; }

    void expect_end() {
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c)
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        get();
    }

    bool at(char c) {
        skip_ws();
        return peek() == c;
    }

  private:
    RawTerm parse_term(bool negate) {
        skip_ws();
        RawTerm t{{}, Scalar::one(field_)};
        bool have_any = false;
        if (std::isdigit(peek())) {
            t.coeff = parse_coef();
            have_any = true;
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
                if (peek() != 'X') throw SyntaxError(pos_, "expected monomial after '*'");
            }
        }
        skip_ws();
        while (peek() == 'X') {
            have_any = true;
            get();
            int idx = parse_int("variable index");
            if (idx < 1) throw SyntaxError(pos_, "variable index must be >= 1");
            std::uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                get();
                e = static_cast<std::uint32_t>(parse_int("exponent"));
            }
            t.exps[idx - 1] += e;
            max_var_ = std::max(max_var_, idx);
            skip_ws();
            // '*' between factors is optional
            std::size_t mark = pos_;
            if (peek() == '*') {
                get();
                skip_ws();
                if (peek() != 'X') { pos_ = mark; break; }
            }
        }
        if (!have_any) throw SyntaxError(pos_, "expected coefficient or monomial");
        if (negate) t.coeff = -t.coeff;
        return t;
    }

    Scalar parse_coef() {
        long long num = parse_int("coefficient");
        skip_ws();
        if (peek() == '/') {
            get();
            long long den = parse_int("denominator");
            Scalar d = Scalar::from_int(den, field_);
            if (d.is_zero()) throw SyntaxError(pos_, "zero denominator");
            return Scalar::from_int(num, field_) / d;
        }
        return Scalar::from_int(num, field_);
    }

    long long parse_int(const char* what) {
        skip_ws();
        if (!std::isdigit(peek())) throw SyntaxError(pos_, std::string("expected ") + what);
        long long v = 0;
        while (std::isdigit(peek())) v = v * 10 + (get() - '0');
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    const std::string& s_;
    FieldSpec field_;
    std::size_t pos_ = 0;
    int max_var_ = 0;
};

inline Poly materialize(const std::vector<RawTerm>& terms, int nvars, const FieldSpec& field) {
    Poly p = Poly::zero(nvars, field);
    for (const auto& t : terms) {
        Monomial m(nvars, 0);
        for (const auto& [i, e] : t.exps) m[i] = e;
        p = p + Poly::monomial(m, t.coeff);
    }
    return p;
}

}  // namespace detail

// Parse a polynomial. nvars == 0 infers the count from the largest index used.
inline Poly parse_poly(const std::string& text, const FieldSpec& field, int nvars = 0) {
    detail::PolyParser parser(text, field);
    auto terms = parser.parse_sum();
    parser.expect_end();
    if (nvars == 0) nvars = parser.max_var();
    if (parser.max_var() > nvars)
        throw ArityMismatchError("polynomial uses X" + std::to_string(parser.max_var()) +
                                 " but only " + std::to_string(nvars) + " variables requested");
    return detail::materialize(terms, nvars, field);
}

// Parse `(P1, P2)`. n == 0 infers the pair count from the variables used.
inline PolyPair parse_pair(const std::string& text, const FieldSpec& field, int n = 0) {
    detail::PolyParser parser(text, field);
    parser.expect('(');
    auto t1 = parser.parse_sum();
    parser.expect(',');
    auto t2 = parser.parse_sum();
    parser.expect(')');
    parser.expect_end();
    if (n == 0) n = (parser.max_var() + 1) / 2;
    if (n < 1) n = 1;
    int nvars = 2 * n;
    if (parser.max_var() > nvars)
        throw ArityMismatchError("pair uses X" + std::to_string(parser.max_var()) +
                                 " but arity " + std::to_string(n) + " allows only X1..X" +
                                 std::to_string(nvars));
    return PolyPair(detail::materialize(t1, nvars, field), detail::materialize(t2, nvars, field));
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const PolyPair& pp) { return os << to_string(pp); }

}  // namespace centroidal
