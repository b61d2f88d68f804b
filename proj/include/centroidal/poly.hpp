#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "centroidal/errors.hpp"
#include "centroidal/field.hpp"

namespace centroidal {

// Exponent vector; index k holds the exponent of variable X_{k+1}.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t monomial_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

// Graded lexicographic: compare by total degree, ties broken lexicographically
// on the exponent vector.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Storage comparator: leading (largest) monomial first.
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// Sparse multivariate polynomial with exact coefficients. Canonical form: no
// zero coefficients stored, entries iterated leading-monomial-first. Two
// polynomials are equal iff field, variable count, and entry sequences match.
class Poly {
  public:
    using TermMap = std::map<Monomial, Scalar, GrlexDescending>;

    Poly() : nvars_(0), field_(FieldSpec::rationals()) {}
    Poly(int nvars, const FieldSpec& field) : nvars_(nvars), field_(field) {}

    static Poly zero(int nvars, const FieldSpec& field) { return Poly(nvars, field); }

    static Poly constant(int nvars, const Scalar& c) {
        Poly p(nvars, c.field());
        if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), c);
        return p;
    }

    static Poly constant(int nvars, long long v, const FieldSpec& field) {
        return constant(nvars, Scalar::from_int(v, field));
    }

    // X_{index0+1}; index is 0-based internally.
    static Poly variable(int index0, int nvars, const FieldSpec& field) {
        if (index0 < 0 || index0 >= nvars)
            throw ArityMismatchError("variable index " + std::to_string(index0 + 1) +
                                     " out of range for " + std::to_string(nvars) + " variables");
        Monomial m(nvars, 0);
        m[index0] = 1;
        Poly p(nvars, field);
        p.terms_.emplace(std::move(m), Scalar::one(field));
        return p;
    }

    static Poly monomial(const Monomial& exps, const Scalar& coeff) {
        Poly p(static_cast<int>(exps.size()), coeff.field());
        if (!coeff.is_zero()) p.terms_.emplace(exps, coeff);
        return p;
    }

    int num_vars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }

    // Total degree; 0 for the zero polynomial.
    std::uint32_t total_degree() const {
        return terms_.empty() ? 0 : monomial_degree(terms_.begin()->first);
    }

    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    Poly operator+(const Poly& o) const {
        check_compatible(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_compatible(o);
        Poly r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(nvars_, field_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_compatible(o);
        Poly r(nvars_, field_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(static_cast<std::size_t>(nvars_));
                for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Poly scale(const Scalar& c) const {
        if (c.field() != field_)
            throw FieldMismatchError("field mismatch: " + field_.name() + " vs " + c.field().name());
        Poly r(nvars_, field_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly pow(std::uint32_t e) const {
        Poly r = constant(nvars_, Scalar::one(field_));
        for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    Scalar eval_at(const std::vector<Scalar>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw ArityMismatchError("evaluation point has " + std::to_string(point.size()) +
                                     " coordinates, polynomial has " + std::to_string(nvars_) +
                                     " variables");
        Scalar total = Scalar::zero(field_);
        for (const auto& [m, c] : terms_) {
            Scalar v = c;
            for (int i = 0; i < nvars_; ++i)
                for (std::uint32_t e = 0; e < m[i]; ++e) v = v * point[i];
            total = total + v;
        }
        return total;
    }

    // Ring homomorphism: X_{i+1} |-> images[i]. All images must share a
    // variable count and the coefficient field.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw ArityMismatchError("substitute: expected " + std::to_string(nvars_) +
                                     " images, got " + std::to_string(images.size()));
        int out_vars = nvars_ == 0 ? 0 : images.front().num_vars();
        for (const auto& im : images) {
            if (im.num_vars() != out_vars)
                throw ArityMismatchError("substitute: images disagree on variable count");
            if (im.field() != field_)
                throw FieldMismatchError("substitute: image field " + im.field().name() +
                                         " vs " + field_.name());
        }
        Poly r(out_vars, field_);
        for (const auto& [m, c] : terms_) {
            Poly t = Poly::constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i)
                if (m[i] > 0) t = t * images[i].pow(m[i]);
            r = r + t;
        }
        return r;
    }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

  private:
    void check_compatible(const Poly& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("field mismatch: " + field_.name() + " vs " + o.field_.name());
        if (nvars_ != o.nvars_)
            throw ArityMismatchError("variable count mismatch: " + std::to_string(nvars_) +
                                     " vs " + std::to_string(o.nvars_));
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    FieldSpec field_;
    TermMap terms_;
};

// The interpretation of a boolean function B^n -> B: a pair of polynomials in
// 2n variables, pair i owning (X_{2i-1}, X_{2i}).
struct PolyPair {
    Poly p1, p2;

    PolyPair() = default;  // the empty pair over zero variables

    PolyPair(Poly a, Poly b) : p1(std::move(a)), p2(std::move(b)) {
        if (p1.field() != p2.field())
            throw FieldMismatchError("pair components over different fields");
        if (p1.num_vars() != p2.num_vars())
            throw ArityMismatchError("pair components over different variable counts");
        if (p1.num_vars() % 2 != 0)
            throw ArityMismatchError("pair polynomials need an even variable count");
    }

    int num_vars() const { return p1.num_vars(); }
    int pair_count() const { return p1.num_vars() / 2; }
    const FieldSpec& field() const { return p1.field(); }

    bool operator==(const PolyPair& o) const { return p1 == o.p1 && p2 == o.p2; }
    bool operator!=(const PolyPair& o) const { return !(*this == o); }
};

// A point of field^{2n} with a_{2i-1} + a_{2i} = 1 for every pair.
struct TotalPoint {
    std::vector<Scalar> coords;

    explicit TotalPoint(std::vector<Scalar> cs) : coords(std::move(cs)) {
        if (coords.size() % 2 != 0)
            throw ArityMismatchError("total point needs an even number of coordinates");
        for (std::size_t i = 0; i + 1 < coords.size(); i += 2) {
            if (!(coords[i] + coords[i + 1]).is_one())
                throw Error("not a total point: coordinates " + std::to_string(i + 1) + "," +
                            std::to_string(i + 2) + " sum to " +
                            (coords[i] + coords[i + 1]).to_string());
        }
    }

    // Build from the free odd coordinates; even ones are forced to 1 - a.
    static TotalPoint from_free(const std::vector<Scalar>& odd) {
        std::vector<Scalar> cs;
        cs.reserve(odd.size() * 2);
        for (const auto& a : odd) {
            cs.push_back(a);
            cs.push_back(Scalar::one(a.field()) - a);
        }
        return TotalPoint(std::move(cs));
    }
};

}  // namespace centroidal
