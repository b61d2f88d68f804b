#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "centroidal/algebra.hpp"
#include "centroidal/errors.hpp"
#include "centroidal/poly.hpp"
#include "centroidal/poly_io.hpp"

namespace centroidal {

struct TotalityReport {
    bool strongly_total = false;
    Poly defect;  // phi(P1) + phi(P2) - 1, over n variables
    std::optional<bool> semantically_total;
    std::optional<std::vector<Scalar>> witness;  // full 2n-coordinate total point
};

// The identity check: phi(P1) + phi(P2) = 1 as polynomials.
inline TotalityReport is_strongly_total(const PolyPair& pp) {
    TotalityReport r;
    Poly sum = phi(pp.p1) + phi(pp.p2);
    r.defect = sum - Poly::constant(sum.num_vars(), 1, pp.field());
    r.strongly_total = r.defect.is_zero();
    return r;
}

constexpr std::uint64_t default_enumeration_cap = 10'000'000;

// Semantic totality: does the pair send total points to total values?
// Over GF(p) this is decided by exhausting all p^n total points (witness =
// first failure, free coordinates enumerated lexicographically). Over Q it
// coincides with strong totality; 100 fixed-seed random total points are
// sampled on top as a sanity check.
inline TotalityReport is_total(const PolyPair& pp,
                               std::uint64_t enumeration_cap = default_enumeration_cap) {
    TotalityReport r = is_strongly_total(pp);
    const FieldSpec& f = pp.field();
    int n = pp.pair_count();
    const Scalar one = Scalar::one(f);

    auto check_point = [&](const std::vector<Scalar>& free_coords) -> std::optional<std::vector<Scalar>> {
        std::vector<Scalar> point;
        point.reserve(2 * n);
        for (const auto& a : free_coords) {
            point.push_back(a);
            point.push_back(one - a);
        }
        Scalar v = pp.p1.eval_at(point) + pp.p2.eval_at(point);
        if (v == one) return std::nullopt;
        return point;
    };

    if (f.is_rationals()) {
        r.semantically_total = r.strongly_total;
        std::mt19937_64 rng(20080701u);
        std::uniform_int_distribution<long long> num(-9, 9);
        std::uniform_int_distribution<long long> den(1, 9);
        for (int trial = 0; trial < 100 && !r.witness; ++trial) {
            std::vector<Scalar> free_coords;
            for (int k = 0; k < n; ++k)
                free_coords.push_back(Scalar::from_int(num(rng), f) /
                                      Scalar::from_int(den(rng), f));
            if (auto w = check_point(free_coords)) {
                r.semantically_total = false;
                r.witness = std::move(*w);
            }
        }
        return r;
    }

    std::uint64_t p = f.modulus();
    BigInt total_points = 1;
    for (int k = 0; k < n; ++k) total_points *= p;
    if (total_points > enumeration_cap)
        throw EnumerationTooLargeError("exhaustive check needs " + total_points.str() +
                                       " points, cap is " + std::to_string(enumeration_cap));

    std::vector<std::uint64_t> digits(n, 0);
    r.semantically_total = true;
    while (true) {
        std::vector<Scalar> free_coords;
        free_coords.reserve(n);
        for (int k = 0; k < n; ++k) free_coords.push_back(Scalar::residue(digits[k], f));
        if (auto w = check_point(free_coords)) {
            r.semantically_total = false;
            r.witness = std::move(*w);
            return r;
        }
        int k = n - 1;
        while (k >= 0 && ++digits[k] == p) digits[k--] = 0;
        if (k < 0) break;
    }
    return r;
}

// One kernel-basis polynomial, identified by its exponent rows:
//   ((X1+X2)^{i_1} ... (X_{2n-1}+X_{2n})^{i_n} - 1) * X1^{j_1} ... X_{2n-1}^{j_n}
// with at least one i_k nonzero.
struct BasisElement {
    Monomial I, J;  // n entries each

    bool operator==(const BasisElement& o) const { return I == o.I && J == o.J; }
    bool operator!=(const BasisElement& o) const { return !(*this == o); }
};

// Enumeration/decomposition order: ascending total degree, ties broken by
// descending lex on the concatenated (I,J) vector.
inline bool basis_order_less(const BasisElement& a, const BasisElement& b) {
    std::uint32_t da = monomial_degree(a.I) + monomial_degree(a.J);
    std::uint32_t db = monomial_degree(b.I) + monomial_degree(b.J);
    if (da != db) return da < db;
    if (a.I != b.I) return std::lexicographical_compare(b.I.begin(), b.I.end(), a.I.begin(), a.I.end());
    return std::lexicographical_compare(b.J.begin(), b.J.end(), a.J.begin(), a.J.end());
}

inline std::string to_string(const BasisElement& b) {
    auto row = [](const Monomial& m) {
        std::string s;
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(m[k]);
        }
        return s;
    };
    return "(" + row(b.I) + ";" + row(b.J) + ")";
}

inline BigInt kernel_dim(std::uint32_t n, std::uint32_t d) {
    return binomial(2 * n + d, 2 * n) - binomial(n + d, n);
}

// All basis elements with |I| + |J| <= d and I != 0.
inline std::vector<BasisElement> kernel_basis(std::uint32_t n, std::uint32_t d) {
    std::vector<BasisElement> out;
    Monomial I(n, 0), J(n, 0);
    // odometer over the concatenated exponent vector, pruned by total degree
    std::vector<std::uint32_t> v(2 * n, 0);
    while (true) {
        std::uint32_t deg = std::accumulate(v.begin(), v.end(), std::uint32_t{0});
        if (deg <= d) {
            bool has_i = false;
            for (std::uint32_t k = 0; k < n; ++k) has_i = has_i || v[k] > 0;
            if (has_i) {
                std::copy(v.begin(), v.begin() + n, I.begin());
                std::copy(v.begin() + n, v.end(), J.begin());
                out.push_back({I, J});
            }
        }
        int k = static_cast<int>(2 * n) - 1;
        while (k >= 0 && v[k] == d) v[k--] = 0;
        if (k < 0) break;
        ++v[k];
    }
    std::sort(out.begin(), out.end(), basis_order_less);
    return out;
}

inline Poly realize_basis_element(const BasisElement& b, const FieldSpec& field) {
    std::uint32_t n = static_cast<std::uint32_t>(b.I.size());
    int nvars = static_cast<int>(2 * n);
    Poly prod = Poly::constant(nvars, 1, field);
    for (std::uint32_t k = 0; k < n; ++k) {
        if (b.I[k] == 0) continue;
        Poly s = Poly::variable(2 * k, nvars, field) + Poly::variable(2 * k + 1, nvars, field);
        prod = prod * s.pow(b.I[k]);
    }
    Monomial jm(nvars, 0);
    for (std::uint32_t k = 0; k < n; ++k) jm[2 * k] = b.J[k];
    return (prod - Poly::constant(nvars, 1, field)) * Poly::monomial(jm, Scalar::one(field));
}

// Exact linear combination of basis elements, parts in basis order.
struct KernelDecomposition {
    std::vector<std::pair<Scalar, BasisElement>> parts;

    bool operator==(const KernelDecomposition& o) const { return parts == o.parts; }
};

// Write P in the kernel basis. In split coordinates P = sum_I c_I(Y) S^I with
// sum_I c_I = 0 (that is phi(P) = 0), so P = sum_{I != 0} c_I(Y) (S^I - 1)
// and the Y-monomials of each c_I read off the coefficients directly.
inline KernelDecomposition decompose(const Poly& p) {
    Poly defect = phi(p);
    if (!defect.is_zero()) throw NotInKernelError(to_string(defect));
    std::uint32_t n = static_cast<std::uint32_t>(p.num_vars() / 2);

    KernelDecomposition dec;
    const Poly split = split_coords(p);
    for (const auto& [m, c] : split.terms()) {
        Monomial J(m.begin(), m.begin() + n);
        Monomial I(m.begin() + n, m.end());
        if (monomial_degree(I) == 0) continue;  // forced by the I != 0 slices
        dec.parts.emplace_back(c, BasisElement{std::move(I), std::move(J)});
    }
    std::sort(dec.parts.begin(), dec.parts.end(),
              [](const auto& a, const auto& b) { return basis_order_less(a.second, b.second); });
    return dec;
}

inline Poly reconstruct(const KernelDecomposition& dec, std::uint32_t n, const FieldSpec& field) {
    Poly sum = Poly::zero(static_cast<int>(2 * n), field);
    for (const auto& [c, b] : dec.parts) sum = sum + realize_basis_element(b, field).scale(c);
    return sum;
}

}  // namespace centroidal
