#pragma once

#include <string>
#include <vector>

#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"
#include "centroidal/term.hpp"

namespace centroidal {

// A named term together with the pair it must evaluate to, exactly.
struct CorpusEntry {
    std::string name;
    TermPtr term;
    PolyPair expected;
    std::string note;

    int arity() const { return expected.pair_count(); }
};

// Pair aliases used when printing the ternary entries: argument 1 is (X1,X2),
// argument 2 is (Y1,Y2), argument 3 is (Z1,Z2).
inline std::vector<std::string> gustave_aliases() {
    return {"X1", "X2", "Y1", "Y2", "Z1", "Z2"};
}

// The step-by-step construction of Berry's Gustave function, the classic
// ternary boolean function that is stable but not sequential. Arguments:
// x1 -> (X1,X2), x2 -> (Y1,Y2), x3 -> (Z1,Z2); canonical X1..X6 in values.
inline std::vector<CorpusEntry> corpus_gustave() {
    const FieldSpec q = FieldSpec::rationals();
    const Scalar one = Scalar::one(q);
    auto pair6 = [&](const char* text) { return parse_pair(text, q, 3); };

    TermPtr P = star(star(var(1), var(2)), var(3));
    TermPtr Q = star(star(bnot(var(1)), bnot(var(3))), bnot(var(2)));
    TermPtr R = pi1(star(var(2), bnot(var(3))));
    TermPtr S = affine({{one, pi1(var(1))}, {one, bnot(var(1))}, {-one, tt()}});
    TermPtr U = star(R, S);
    TermPtr V = ite(U, tt(), bnot(plus(var(1))));
    TermPtr H = affine({{one, P}, {one, Q}, {-one, bnot(plus(V))}});
    TermPtr G = bnot(H);

    return {
        {"gustave.P", P, pair6("(X1*X3*X5, X1*X3*X6 + X1*X4 + X2)"),
         "left-nested star of the three arguments"},
        {"gustave.Q", Q, pair6("(X2*X4*X6, X2*X3*X6 + X2*X5 + X1)"),
         "star of the negated arguments, order 1,3,2"},
        {"gustave.R", R, pair6("(X3*X6, 1 - X3*X6)"), "first projection of (x2 * not x3)"},
        {"gustave.S", S, pair6("(X1 + X2 - 1, 1)"), "affine mix of pi1 x1, not x1, and T"},
        {"gustave.U", U, pair6("(X1*X3*X6 + X2*X3*X6 - X3*X6, 1)"),
         "often written 'if R then S else T'; encoded as (R * S) = 'if R then S else F', "
         "whose value is the one the later steps build on (the 'else T' reading looks like "
         "a typo)"},
        {"gustave.V", V, pair6("(X1*X3*X6 + X2*X3*X6 - X3*X6, X1 + X2)"),
         "conditional patching the second component to X1+X2"},
        {"gustave.H", H, pair6("(X1*X3*X5 + X2*X4*X6, X1*X4 + X2*X5 + X3*X6)"),
         "P + Q - not(V^+); the swapped Gustave pair"},
        {"gustave.G", G, pair6("(X1*X4 + X2*X5 + X3*X6, X1*X3*X5 + X2*X4*X6)"),
         "Gustave's function itself"},
    };
}

enum class OrVariant { sequential, symmetric, parallel };

// Binary "or" variants over arguments x1 -> (X1,X2), x2 -> (X3,X4).
inline CorpusEntry corpus_or(OrVariant variant) {
    const FieldSpec q = FieldSpec::rationals();
    const Scalar one = Scalar::one(q);
    const Scalar half = one / Scalar::from_int(2, q);
    auto pair4 = [&](const char* text) { return parse_pair(text, q, 2); };

    switch (variant) {
        case OrVariant::sequential:
            return {"or.sequential", ite(var(1), tt(), var(2)), pair4("(X1 + X2*X3, X2*X4)"),
                    "if x1 then T else x2; agrees with logical or on total inputs but is "
                    "not commutative"};
        case OrVariant::symmetric:
            return {"or.symmetric",
                    affine({{half, ite(var(1), tt(), var(2))}, {half, ite(var(2), tt(), var(1))}}),
                    pair4("(1/2*X1 + 1/2*X3 + 1/2*X2*X3 + 1/2*X1*X4, X2*X4)"),
                    "average of the two sequential orders; commutative with F neutral, but T "
                    "is not absorbent"};
        case OrVariant::parallel:
            return {"or.parallel",
                    affine({{one, ite(var(1), tt(), var(2))},
                            {one, ite(var(2), tt(), var(1))},
                            {-one, ite(var(1), plus(var(2)), var(2))}}),
                    pair4("(X1 + X3 - X1*X3, X2*X4)"),
                    "commutative, F neutral, T absorbent; the closest fit to a parallel or"};
    }
    throw Error("unknown or variant");
}

inline std::vector<CorpusEntry> corpus_all() {
    std::vector<CorpusEntry> out = corpus_gustave();
    out.push_back(corpus_or(OrVariant::sequential));
    out.push_back(corpus_or(OrVariant::symmetric));
    out.push_back(corpus_or(OrVariant::parallel));
    return out;
}

}  // namespace centroidal
