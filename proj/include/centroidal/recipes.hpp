#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"
#include "centroidal/term.hpp"

namespace centroidal {

namespace detail {

// Left-nested star chain evaluating to (first-components multiplied, ...).
inline TermPtr star_chain(const std::vector<TermPtr>& factors) {
    if (factors.empty()) return tt();
    TermPtr t = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) t = star(t, factors[i]);
    return t;
}

// A term whose evaluation has first component exactly the monomial m.
// Odd variables X_{2k-1} come from x_k, even ones X_{2k} from not x_k.
inline TermPtr monomial_term(const Monomial& m) {
    std::vector<TermPtr> factors;
    int n = static_cast<int>(m.size()) / 2;
    for (int k = 1; k <= n; ++k) {
        for (std::uint32_t e = 0; e < m[2 * k - 2]; ++e) factors.push_back(var(k));
        for (std::uint32_t e = 0; e < m[2 * k - 1]; ++e) factors.push_back(bnot(var(k)));
    }
    return star_chain(factors);
}

}  // namespace detail

// A term whose evaluation has first component exactly p1 (the second is
// whatever the construction yields). Each monomial is scaled through the
// constant pair (m'a, 1-m'a) and the pieces are averaged with weights 1/m'.
// Over GF(p), if the monomial count is divisible by p, one dummy entry of
// coefficient 0 is added so the weight 1/m' exists.
inline TermPtr recipe_a(const Poly& p1) {
    if (p1.num_vars() % 2 != 0)
        throw ArityMismatchError("recipe_a needs a pair polynomial (even variable count)");
    const FieldSpec& f = p1.field();
    std::size_t m = p1.term_count();
    if (m == 0) return ff();

    std::size_t padded = m;
    if (f.is_prime_field() && m % f.modulus() == 0) padded = m + 1;
    Scalar count = Scalar::from_int(static_cast<long long>(padded), f);
    Scalar weight = count.inverse();

    AffineParts parts;
    parts.reserve(padded);
    for (const auto& [mono, coeff] : p1.terms())
        parts.emplace_back(weight, ite(const_scalar(count * coeff), detail::monomial_term(mono), ff()));
    if (padded > m)
        parts.emplace_back(weight, ite(const_scalar(Scalar::zero(f)), tt(), ff()));
    return affine(std::move(parts));
}

// From a term with value (P1, 0) and any polynomial Q1, a term with value
// ((P1-1)*Q1, 1): ((Q1,Q2) * (P1,0)) + F - (Q1,Q2).
inline TermPtr recipe_b(const TermPtr& t, const Poly& q1) {
    if (q1.num_vars() % 2 != 0)
        throw ArityMismatchError("recipe_b needs a pair polynomial (even variable count)");
    const FieldSpec& f = q1.field();
    int n = q1.num_vars() / 2;
    PolyPair tv = evaluate(t, n, f);
    if (!tv.p2.is_zero())
        throw SecondComponentNonzeroError(
            "recipe_b needs a term with second component 0, got " + to_string(tv.p2));
    TermPtr q = recipe_a(q1);
    const Scalar one = Scalar::one(f);
    return affine({{one, star(q, t)}, {one, ff()}, {-one, std::move(q)}});
}

// From a term with value (P1, P2) and any polynomial Q1, a term with value
// (P1+Q1, P2-Q1): t + (Q1+Q2, 0) - (Q2, Q1). Q1 = 0 keeps t unchanged.
inline TermPtr recipe_c(const TermPtr& t, const Poly& q1) {
    if (q1.is_zero()) return t;
    const Scalar one = Scalar::one(q1.field());
    TermPtr q = recipe_a(q1);
    return affine({{one, t}, {one, plus(q)}, {-one, bnot(std::move(q))}});
}

}  // namespace centroidal
