#pragma once

// Exact coefficient rings used throughout kres.
//
// A "ring" here is a small value object exposing zero(), one(), is_zero(),
// exact_div(), from_integer(), parse()/format() and a pivot preference.
// Elements support +, -, * and unary minus directly, so the elimination
// code can be written once and instantiated over Z, Q, F_p and polynomial
// extensions of those.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kres {

using Integer = mpz_class;
using Rational = mpq_class;

// Order of an element with respect to a valuation; infinity for zero.
class Order {
public:
    constexpr Order() = default;
    constexpr explicit Order(std::uint64_t v) : value_(v), finite_(true) {}
    static constexpr Order infinity() { return Order{}; }

    constexpr bool is_infinite() const { return !finite_; }
    // Precondition: finite.
    constexpr std::uint64_t value() const { return value_; }

    friend constexpr bool operator==(const Order& a, const Order& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(const Order& a, const Order& b) {
        if (!b.finite_) return a.finite_;
        return a.finite_ && a.value_ < b.value_;
    }
    friend constexpr bool operator>=(const Order& a, const Order& b) { return !(a < b); }
    friend constexpr bool operator>(const Order& a, const Order& b) { return b < a; }
    friend constexpr bool operator<=(const Order& a, const Order& b) { return !(b < a); }

    std::string to_string() const;

private:
    std::uint64_t value_ = 0;
    bool finite_ = false;
};

/// Deterministic primality test for 64-bit integers (Miller-Rabin with the
/// first twelve prime bases).
bool is_prime(std::uint64_t n);

/// p-adic valuation of n. Throws NotPrime if p is not prime.
Order val_p(const Integer& n, std::uint64_t p);

Integer parse_integer(std::string_view text);
/// Accepts "a" or "a/b"; the result is reduced with positive denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

Integer binomial(unsigned long n, unsigned long k);

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

// ---------------------------------------------------------------------------

class IntegerRing {
public:
    using Element = Integer;
    static constexpr bool kIsField = false;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const Integer& v) const { return v; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    /// Throws InvariantViolation when b does not divide a.
    Element exact_div(const Element& a, const Element& b) const;
    std::optional<Element> try_div(const Element& a, const Element& b) const;
    /// Equal up to a unit (here: up to sign).
    bool associates(const Element& a, const Element& b) const { return cmpabs(a, b) == 0; }
    /// True when a should be preferred over b as an elimination pivot.
    bool better_pivot(const Element& a, const Element& b) const { return cmpabs(a, b) > 0; }
    Element parse(std::string_view text) const { return parse_integer(text); }
    std::string format(const Element& a) const { return a.get_str(); }
    bool operator==(const IntegerRing&) const = default;
};

class RationalField {
public:
    using Element = Rational;
    static constexpr bool kIsField = true;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const Integer& v) const { return Rational(v); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    Element exact_div(const Element& a, const Element& b) const;
    std::optional<Element> try_div(const Element& a, const Element& b) const {
        if (sgn(b) == 0) return std::nullopt;
        return Element(a / b);
    }
    bool associates(const Element& a, const Element& b) const { return (sgn(a) == 0) == (sgn(b) == 0); }
    Element inverse(const Element& a) const;
    bool better_pivot(const Element& a, const Element& b) const { return cmp(abs(a), abs(b)) > 0; }
    Element parse(std::string_view text) const { return parse_rational(text); }
    std::string format(const Element& a) const { return to_string(a); }
    bool operator==(const RationalField&) const = default;
};

/// Element of Z/pZ. Carries its modulus so arithmetic is self-contained.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t s = a.value_ + b.value_;
        if (s >= a.modulus_ || s < a.value_) s -= a.modulus_;
        return raw(s, a.modulus_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.modulus_ - (b.value_ - a.value_),
                   a.modulus_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto prod = static_cast<unsigned __int128>(a.value_) * b.value_;
        return raw(static_cast<std::uint64_t>(prod % a.modulus_), a.modulus_);
    }
    Fp operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.value_ == b.value_; }

    Fp pow(std::uint64_t e) const;
    Fp inverse() const;

private:
    static Fp raw(std::uint64_t v, std::uint64_t m) {
        Fp r;
        r.value_ = v;
        r.modulus_ = m;
        return r;
    }
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
};

inline bool is_zero(const Fp& v) { return v.value() == 0; }

class PrimeField {
public:
    using Element = Fp;
    static constexpr bool kIsField = true;

    /// Throws NotPrime.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    Element zero() const { return Fp(0, p_); }
    Element one() const { return Fp(1, p_); }
    Element from_integer(const Integer& v) const;
    Element from_int(std::int64_t v) const;
    bool is_zero(const Element& a) const { return a.value() == 0; }
    Element exact_div(const Element& a, const Element& b) const;
    std::optional<Element> try_div(const Element& a, const Element& b) const {
        if (b.value() == 0) return std::nullopt;
        return a * b.inverse();
    }
    bool associates(const Element& a, const Element& b) const { return (a.value() == 0) == (b.value() == 0); }
    Element inverse(const Element& a) const;
    bool better_pivot(const Element& a, const Element& b) const {
        return b.value() == 0 && a.value() != 0;
    }
    Element parse(std::string_view text) const { return from_integer(parse_integer(text)); }
    std::string format(const Element& a) const { return std::to_string(a.value()); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

}  // namespace kres
