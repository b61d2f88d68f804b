#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"
#include "centroidal/recipes.hpp"
#include "centroidal/term.hpp"
#include "centroidal/totality.hpp"

namespace centroidal {

// A term with value (1 + (S^I - 1) Y^J, 0) for the basis element (I;J), where
// S^I = prod (X_{2k-1}+X_{2k})^{i_k} and Y^J = prod X_{2k-1}^{j_k}:
//   star chain of (x_k)^+ factors        -> (S^I, 0)
//   recipe_b with Y^J                    -> ((S^I - 1) Y^J, 1)
//   ^+                                   -> ((S^I - 1) Y^J + 1, 0)
inline TermPtr basis_term(const BasisElement& b, const FieldSpec& field) {
    std::uint32_t n = static_cast<std::uint32_t>(b.I.size());
    std::vector<TermPtr> factors;
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t e = 0; e < b.I[k]; ++e) factors.push_back(plus(var(static_cast<int>(k) + 1)));
    TermPtr sum_chain = detail::star_chain(factors);

    Monomial jm(2 * n, 0);
    for (std::uint32_t k = 0; k < n; ++k) jm[2 * k] = b.J[k];
    Poly yj = Poly::monomial(jm, Scalar::one(field));
    return plus(recipe_b(sum_chain, yj));
}

struct SynthesisResult {
    TermPtr term;
    bool verified = false;
    PolyPair evaluation;
    std::size_t nodes = 0;
    std::size_t basis_count = 0;
};

// Constructive completeness: a centroidal term evaluating exactly to any
// strongly total pair.
//   1. D := P1 + P2 - 1 must lie in ker(phi), else the pair is rejected;
//   2. decompose D over the kernel basis;
//   3. affine-combine the basis terms (plus a T entry to make the
//      coefficients sum to 1), giving value (P1+P2, 0);
//   4. recipe_c with -P2 moves that to (P1, P2);
//   5. re-evaluate the final term and compare with the input.
inline SynthesisResult synthesize(const PolyPair& pp) {
    const FieldSpec& f = pp.field();
    int nvars = pp.num_vars();
    Poly diff = pp.p1 + pp.p2 - Poly::constant(nvars, 1, f);
    Poly defect = phi(diff);
    if (!defect.is_zero())
        throw NotStronglyTotalError(to_string(defect), f.is_prime_field());

    KernelDecomposition dec = decompose(diff);

    TermPtr t_sum;
    if (dec.parts.empty()) {
        t_sum = tt();
    } else {
        AffineParts parts;
        parts.reserve(dec.parts.size() + 1);
        Scalar coeff_sum = Scalar::zero(f);
        for (const auto& [c, b] : dec.parts) {
            parts.emplace_back(c, basis_term(b, f));
            coeff_sum = coeff_sum + c;
        }
        parts.emplace_back(Scalar::one(f) - coeff_sum, tt());
        t_sum = affine(std::move(parts));
    }

    SynthesisResult res;
    res.term = flatten(recipe_c(t_sum, -pp.p2));
    res.evaluation = evaluate(res.term, pp.pair_count(), f);
    res.verified = res.evaluation == pp;
    res.nodes = node_count(res.term);
    res.basis_count = dec.parts.size();
    if (!res.verified)
        throw Error("synthesis produced a term evaluating to " + to_string(res.evaluation) +
                    " instead of " + to_string(pp));
    return res;
}

// The strict-inclusion witness over GF(p): (1 + X1^p - X1, 0), the closed
// form of 1 + X(X+1)...(X+p-1). Total on every point of GF(p) yet not
// strongly total; both facts are checked before returning.
inline PolyPair counterexample_pair(std::uint64_t p) {
    FieldSpec f = FieldSpec::gf(p);  // throws NotPrimeError if p is not prime
    Monomial xp(2, 0);
    xp[0] = static_cast<std::uint32_t>(p);
    Poly p1 = Poly::monomial(xp, Scalar::one(f)) - Poly::variable(0, 2, f) +
              Poly::constant(2, 1, f);
    PolyPair pair(std::move(p1), Poly::zero(2, f));
    if (!is_total(pair).semantically_total.value())
        throw Error("counterexample construction failed: pair is not total");
    if (is_strongly_total(pair).strongly_total)
        throw Error("counterexample construction failed: pair is strongly total");
    return pair;
}

}  // namespace centroidal
