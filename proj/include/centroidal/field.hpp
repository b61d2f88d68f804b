#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "centroidal/errors.hpp"

namespace centroidal {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

enum class FieldKind { rationals, prime_field };

// The coefficient field: Q, or GF(p) for a prime p.
class FieldSpec {
  public:
    FieldSpec() : kind_(FieldKind::rationals), p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }

    static FieldSpec gf(std::uint64_t p) {
        if (!detail::is_prime_u64(p))
            throw NotPrimeError("GF(" + std::to_string(p) + "): modulus is not prime");
        FieldSpec f;
        f.kind_ = FieldKind::prime_field;
        f.p_ = p;
        return f;
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
    std::uint64_t modulus() const { return p_; }

    std::string name() const {
        return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  private:
    FieldKind kind_;
    std::uint64_t p_;
};

// An exact field element. Rationals are kept in lowest terms with a positive
// denominator (cpp_rational maintains that canonical form); prime-field
// elements are residues in [0, p).
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()), q_(0), r_(0) {}

    static Scalar zero(const FieldSpec& f) { return from_int(0, f); }
    static Scalar one(const FieldSpec& f) { return from_int(1, f); }

    static Scalar from_int(long long v, const FieldSpec& f) {
        Scalar s;
        s.field_ = f;
        if (f.is_rationals()) {
            s.q_ = v;
        } else {
            long long m = static_cast<long long>(f.modulus());
            long long r = v % m;
            if (r < 0) r += m;
            s.r_ = static_cast<std::uint64_t>(r);
        }
        return s;
    }

    static Scalar rational(BigInt num, BigInt den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        Scalar s;
        s.field_ = FieldSpec::rationals();
        s.q_ = BigRational(std::move(num), std::move(den));
        return s;
    }

    static Scalar residue(std::uint64_t r, const FieldSpec& f) {
        Scalar s;
        s.field_ = f;
        s.r_ = r % f.modulus();
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const { return field_.is_rationals() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return field_.is_rationals() ? q_ == 1 : r_ == 1; }

    const BigRational& rational_value() const { return q_; }
    std::uint64_t residue_value() const { return r_; }

    Scalar operator+(const Scalar& o) const {
        check_same_field(o);
        Scalar s(*this);
        if (field_.is_rationals()) s.q_ += o.q_;
        else s.r_ = add_mod(r_, o.r_, field_.modulus());
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check_same_field(o);
        Scalar s(*this);
        if (field_.is_rationals()) s.q_ -= o.q_;
        else s.r_ = add_mod(r_, field_.modulus() - o.r_, field_.modulus());
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check_same_field(o);
        Scalar s(*this);
        if (field_.is_rationals()) s.q_ *= o.q_;
        else s.r_ = detail::mulmod(r_, o.r_, field_.modulus());
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar operator-() const {
        Scalar s(*this);
        if (field_.is_rationals()) s.q_ = -q_;
        else s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.name());
        Scalar s(*this);
        if (field_.is_rationals()) s.q_ = 1 / q_;
        else s.r_ = detail::powmod(r_, field_.modulus() - 2, field_.modulus());
        return s;
    }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order within a field; used only for canonical containers.
    bool operator<(const Scalar& o) const {
        check_same_field(o);
        return field_.is_rationals() ? q_ < o.q_ : r_ < o.r_;
    }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(r_);
        std::string s = numerator(q_).str();
        if (denominator(q_) != 1) s += "/" + denominator(q_).str();
        return s;
    }

  private:
    void check_same_field(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("field mismatch: " + field_.name() + " vs " + o.field_.name());
    }

    static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
    }

    FieldSpec field_;
    BigRational q_;
    std::uint64_t r_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace centroidal
