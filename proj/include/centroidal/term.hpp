#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/field.hpp"
#include "centroidal/poly.hpp"

namespace centroidal {

// Core calculus: const_true, const_false, var, if_else, affine.
// The rest is sugar that desugars into the core.
enum class TermKind {
    const_true,
    const_false,
    var,
    if_else,
    affine,
    not_op,
    star,
    plus,  // postfix ^+
    pi1,
    const_scalar,
};

class Term;
using TermPtr = std::shared_ptr<const Term>;
using AffinePart = std::pair<Scalar, TermPtr>;
using AffineParts = std::vector<AffinePart>;

namespace detail {
inline TermPtr make_term(struct TermInit&& init);
}

namespace detail {
struct TermInit {
    TermKind kind = TermKind::const_true;
    int var_index = 0;
    Scalar scalar{};
    std::array<TermPtr, 3> children{};
    AffineParts parts{};
};
}  // namespace detail

// Immutable AST node. Built only through the factory functions below, which
// enforce the construction invariants (affine coefficients sum to exactly 1,
// variable indices >= 1). An affine block violating the sum condition is
// unrepresentable.
class Term {
  public:
    TermKind kind() const { return kind_; }
    int var_index() const { return var_index_; }
    const Scalar& scalar_value() const { return scalar_; }
    const AffineParts& parts() const { return parts_; }
    const TermPtr& child(std::size_t i) const { return children_[i]; }

  private:
    explicit Term(detail::TermInit&& i)
        : kind_(i.kind),
          var_index_(i.var_index),
          scalar_(std::move(i.scalar)),
          children_(std::move(i.children)),
          parts_(std::move(i.parts)) {}

    friend TermPtr detail::make_term(detail::TermInit&&);

    TermKind kind_;
    int var_index_;
    Scalar scalar_;
    std::array<TermPtr, 3> children_;
    AffineParts parts_;
};

namespace detail {
inline TermPtr make_term(TermInit&& init) { return TermPtr(new Term(std::move(init))); }
}

inline TermPtr tt() {
    static const TermPtr t = detail::make_term({.kind = TermKind::const_true});
    return t;
}

inline TermPtr ff() {
    static const TermPtr t = detail::make_term({.kind = TermKind::const_false});
    return t;
}

inline TermPtr var(int index) {
    if (index < 1)
        throw VarOutOfRangeError("variable index must be >= 1, got " + std::to_string(index));
    return detail::make_term({.kind = TermKind::var, .var_index = index});
}

inline TermPtr ite(TermPtr cond, TermPtr then_t, TermPtr else_t) {
    return detail::make_term({.kind = TermKind::if_else,
                              .children = {std::move(cond), std::move(then_t), std::move(else_t)}});
}

// Affine combination with coefficient sum exactly 1. Zero-coefficient parts
// are dropped and a single remaining part with coefficient 1 collapses to the
// part itself, so `{1 t}` is just t.
inline TermPtr affine(AffineParts parts) {
    if (parts.empty()) throw Error("affine combination needs at least one part");
    const FieldSpec f = parts.front().first.field();
    Scalar sum = Scalar::zero(f);
    for (const auto& [c, t] : parts) sum = sum + c;  // Scalar+ checks field agreement
    if (!sum.is_one()) throw AffineSumNotOneError(sum.to_string());
    AffineParts kept;
    kept.reserve(parts.size());
    for (auto& p : parts)
        if (!p.first.is_zero()) kept.push_back(std::move(p));
    if (kept.size() == 1 && kept.front().first.is_one()) return kept.front().second;
    return detail::make_term({.kind = TermKind::affine, .parts = std::move(kept)});
}

inline TermPtr bnot(TermPtr t) {
    return detail::make_term({.kind = TermKind::not_op, .children = {std::move(t)}});
}

inline TermPtr star(TermPtr a, TermPtr b) {
    return detail::make_term({.kind = TermKind::star, .children = {std::move(a), std::move(b)}});
}

inline TermPtr plus(TermPtr t) {
    return detail::make_term({.kind = TermKind::plus, .children = {std::move(t)}});
}

inline TermPtr pi1(TermPtr t) {
    return detail::make_term({.kind = TermKind::pi1, .children = {std::move(t)}});
}

// The constant pair (a, 1-a).
inline TermPtr const_scalar(const Scalar& a) {
    return detail::make_term({.kind = TermKind::const_scalar, .scalar = a});
}

inline bool operator==(const Term& a, const Term& b) {
    if (&a == &b) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case TermKind::const_true:
        case TermKind::const_false:
            return true;
        case TermKind::var:
            return a.var_index() == b.var_index();
        case TermKind::const_scalar:
            return a.scalar_value() == b.scalar_value();
        case TermKind::if_else:
            return *a.child(0) == *b.child(0) && *a.child(1) == *b.child(1) &&
                   *a.child(2) == *b.child(2);
        case TermKind::star:
            return *a.child(0) == *b.child(0) && *a.child(1) == *b.child(1);
        case TermKind::not_op:
        case TermKind::plus:
        case TermKind::pi1:
            return *a.child(0) == *b.child(0);
        case TermKind::affine: {
            if (a.parts().size() != b.parts().size()) return false;
            for (std::size_t i = 0; i < a.parts().size(); ++i) {
                if (a.parts()[i].first != b.parts()[i].first) return false;
                if (!(*a.parts()[i].second == *b.parts()[i].second)) return false;
            }
            return true;
        }
    }
    return false;
}

inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

inline bool is_core(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::const_true:
        case TermKind::const_false:
        case TermKind::var:
            return true;
        case TermKind::if_else:
            return is_core(t->child(0)) && is_core(t->child(1)) && is_core(t->child(2));
        case TermKind::affine:
            for (const auto& [c, u] : t->parts())
                if (!is_core(u)) return false;
            return true;
        default:
            return false;
    }
}

inline std::size_t node_count(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::const_true:
        case TermKind::const_false:
        case TermKind::var:
        case TermKind::const_scalar:
            return 1;
        case TermKind::if_else:
            return 1 + node_count(t->child(0)) + node_count(t->child(1)) + node_count(t->child(2));
        case TermKind::star:
            return 1 + node_count(t->child(0)) + node_count(t->child(1));
        case TermKind::not_op:
        case TermKind::plus:
        case TermKind::pi1:
            return 1 + node_count(t->child(0));
        case TermKind::affine: {
            std::size_t n = 1;
            for (const auto& [c, u] : t->parts()) n += node_count(u);
            return n;
        }
    }
    return 1;
}

// Translate sugar into the core calculus. The ambient field fixes the scalar
// coefficients introduced by pi1 and constant pairs.
inline TermPtr desugar(const TermPtr& t, const FieldSpec& field) {
    const Scalar one = Scalar::one(field);
    switch (t->kind()) {
        case TermKind::const_true:
        case TermKind::const_false:
        case TermKind::var:
            return t;
        case TermKind::if_else: {
            TermPtr c = desugar(t->child(0), field);
            TermPtr a = desugar(t->child(1), field);
            TermPtr b = desugar(t->child(2), field);
            if (c == t->child(0) && a == t->child(1) && b == t->child(2)) return t;
            return ite(std::move(c), std::move(a), std::move(b));
        }
        case TermKind::affine: {
            AffineParts parts;
            parts.reserve(t->parts().size());
            bool changed = false;
            for (const auto& [c, u] : t->parts()) {
                TermPtr d = desugar(u, field);
                changed = changed || d != u;
                parts.emplace_back(c, std::move(d));
            }
            return changed ? affine(std::move(parts)) : t;
        }
        case TermKind::not_op:
            return ite(desugar(t->child(0), field), ff(), tt());
        case TermKind::star:
            return ite(desugar(t->child(0), field), desugar(t->child(1), field), ff());
        case TermKind::plus:
            return ite(desugar(t->child(0), field), tt(), tt());
        case TermKind::pi1: {
            TermPtr d = desugar(t->child(0), field);
            TermPtr d_plus = ite(d, tt(), tt());
            TermPtr d_not = ite(d, ff(), tt());
            return affine({{one, ff()}, {one, std::move(d_plus)}, {-one, std::move(d_not)}});
        }
        case TermKind::const_scalar: {
            const Scalar& a = t->scalar_value();
            if (a.field() != field)
                throw FieldMismatchError("constant pair over " + a.field().name() +
                                         " evaluated over " + field.name());
            return affine({{a, tt()}, {one - a, ff()}});
        }
    }
    throw Error("desugar: unknown term kind");
}

// Structural evaluation of a core term into a polynomial pair in 2n variables.
inline PolyPair eval_term(const TermPtr& t, int n, const FieldSpec& field) {
    switch (t->kind()) {
        case TermKind::const_true:
            return PolyPair(Poly::constant(2 * n, 1, field), Poly::zero(2 * n, field));
        case TermKind::const_false:
            return PolyPair(Poly::zero(2 * n, field), Poly::constant(2 * n, 1, field));
        case TermKind::var: {
            int i = t->var_index();
            if (i < 1 || i > n)
                throw VarOutOfRangeError("x" + std::to_string(i) + " out of range for arity " +
                                         std::to_string(n));
            return PolyPair(Poly::variable(2 * i - 2, 2 * n, field),
                            Poly::variable(2 * i - 1, 2 * n, field));
        }
        case TermKind::if_else: {
            PolyPair c = eval_term(t->child(0), n, field);
            PolyPair a = eval_term(t->child(1), n, field);
            PolyPair b = eval_term(t->child(2), n, field);
            return PolyPair(c.p1 * a.p1 + c.p2 * b.p1, c.p1 * a.p2 + c.p2 * b.p2);
        }
        case TermKind::affine: {
            Poly acc1 = Poly::zero(2 * n, field), acc2 = Poly::zero(2 * n, field);
            for (const auto& [coeff, u] : t->parts()) {
                if (coeff.field() != field)
                    throw FieldMismatchError("affine coefficient over " + coeff.field().name() +
                                             " evaluated over " + field.name());
                PolyPair p = eval_term(u, n, field);
                acc1 = acc1 + p.p1.scale(coeff);
                acc2 = acc2 + p.p2.scale(coeff);
            }
            return PolyPair(std::move(acc1), std::move(acc2));
        }
        default:
            throw Error("eval_term: term contains sugar; desugar first");
    }
}

// Evaluation of an arbitrary (possibly sugared) term.
inline PolyPair evaluate(const TermPtr& t, int n, const FieldSpec& field) {
    return eval_term(desugar(t, field), n, field);
}

// Merge nested affine nodes (the only rewriting pass; terms are otherwise
// left exactly as constructed).
inline TermPtr flatten(const TermPtr& t) {
    switch (t->kind()) {
        case TermKind::const_true:
        case TermKind::const_false:
        case TermKind::var:
        case TermKind::const_scalar:
            return t;
        case TermKind::if_else: {
            TermPtr c = flatten(t->child(0)), a = flatten(t->child(1)), b = flatten(t->child(2));
            if (c == t->child(0) && a == t->child(1) && b == t->child(2)) return t;
            return ite(std::move(c), std::move(a), std::move(b));
        }
        case TermKind::star: {
            TermPtr a = flatten(t->child(0)), b = flatten(t->child(1));
            if (a == t->child(0) && b == t->child(1)) return t;
            return star(std::move(a), std::move(b));
        }
        case TermKind::not_op:
        case TermKind::plus:
        case TermKind::pi1: {
            TermPtr a = flatten(t->child(0));
            if (a == t->child(0)) return t;
            return t->kind() == TermKind::not_op ? bnot(std::move(a))
                 : t->kind() == TermKind::plus   ? plus(std::move(a))
                                                 : pi1(std::move(a));
        }
        case TermKind::affine: {
            AffineParts out;
            for (const auto& [c, u] : t->parts()) {
                TermPtr fu = flatten(u);
                if (fu->kind() == TermKind::affine) {
                    for (const auto& [d, v] : fu->parts()) out.emplace_back(c * d, v);
                } else {
                    out.emplace_back(c, std::move(fu));
                }
            }
            return affine(std::move(out));
        }
    }
    return t;
}

}  // namespace centroidal
