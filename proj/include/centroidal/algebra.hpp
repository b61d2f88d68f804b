#pragma once

#include <cstdint>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/field.hpp"
#include "centroidal/poly.hpp"

namespace centroidal {

inline BigInt binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint32_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of monomials of degree at most d in n variables: C(n+d, n).
inline BigInt count_monomials_at_most(std::uint32_t n, std::uint32_t d) {
    return binomial(n + d, n);
}

namespace detail {

inline int pair_count_of(const Poly& p, const char* op) {
    if (p.num_vars() % 2 != 0)
        throw ArityMismatchError(std::string(op) + " needs an even variable count, got " +
                                 std::to_string(p.num_vars()));
    return p.num_vars() / 2;
}

}  // namespace detail

// The substitution X_{2k-1} |-> X_k, X_{2k} |-> 1 - X_k. Linear and
// surjective; takes a polynomial in 2n variables to one in n variables.
inline Poly phi(const Poly& p) {
    int n = detail::pair_count_of(p, "phi");
    std::vector<Poly> images;
    images.reserve(2 * n);
    Poly one = Poly::constant(n, Scalar::one(p.field()));
    for (int k = 0; k < n; ++k) {
        Poly xk = Poly::variable(k, n, p.field());
        images.push_back(xk);
        images.push_back(one - xk);
    }
    return p.substitute(images);
}

// Invertible change of coordinates X_{2k-1} |-> Y_k, X_{2k} |-> S_k - Y_k,
// i.e. Y_k = X_{2k-1} and S_k = X_{2k-1} + X_{2k}. The result lives over 2n
// variables ordered (Y_1..Y_n, S_1..S_n). Setting every S_k to 1 yields phi.
inline Poly split_coords(const Poly& p) {
    int n = detail::pair_count_of(p, "split_coords");
    std::vector<Poly> images;
    images.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
        Poly yk = Poly::variable(k, 2 * n, p.field());
        Poly sk = Poly::variable(n + k, 2 * n, p.field());
        images.push_back(yk);
        images.push_back(sk - yk);
    }
    return p.substitute(images);
}

// Inverse of split_coords: Y_k |-> X_{2k-1}, S_k |-> X_{2k-1} + X_{2k}.
inline Poly from_split_coords(const Poly& q) {
    int n = detail::pair_count_of(q, "from_split_coords");
    std::vector<Poly> images;
    images.reserve(2 * n);
    for (int k = 0; k < n; ++k)
        images.push_back(Poly::variable(2 * k, 2 * n, q.field()));
    for (int k = 0; k < n; ++k) {
        Poly odd = Poly::variable(2 * k, 2 * n, q.field());
        Poly even = Poly::variable(2 * k + 1, 2 * n, q.field());
        images.push_back(odd + even);
    }
    return q.substitute(images);
}

}  // namespace centroidal
