#include "kres/arith.hpp"

#include <array>
#include <cctype>

#include "kres/errors.hpp"

namespace kres {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return result;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string Order::to_string() const {
    return finite_ ? std::to_string(value_) : std::string("inf");
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Order val_p(const Integer& n, std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime("val_p: " + std::to_string(p) + " is not prime");
    if (sgn(n) == 0) return Order::infinity();
    Integer prime;
    mpz_import(prime.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    Integer rest;
    auto e = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return Order(e);
}

Integer parse_integer(std::string_view text) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t start = s.front() == '-' ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed integer literal '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("malformed integer literal '" + std::string(text) + "'");
    }
    return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

IntegerRing::Element IntegerRing::exact_div(const Element& a, const Element& b) const {
    auto q = try_div(a, b);
    if (!q) throw InvariantViolation("exact division failed over Z: " + a.get_str() + " / " + b.get_str());
    return *q;
}

std::optional<IntegerRing::Element> IntegerRing::try_div(const Element& a, const Element& b) const {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

RationalField::Element RationalField::exact_div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw InvariantViolation("division by zero over Q");
    return a / b;
}

RationalField::Element RationalField::inverse(const Element& a) const {
    if (sgn(a) == 0) throw InvariantViolation("inverse of zero over Q");
    return 1 / a;
}

Fp Fp::pow(std::uint64_t e) const {
    Fp result(1, modulus_);
    Fp base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

Fp Fp::inverse() const {
    if (value_ == 0) throw InvariantViolation("inverse of zero in F_p");
    return pow(modulus_ - 2);
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw NotPrime("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_integer(const Integer& v) const {
    Integer r;
    Integer mod;
    mpz_import(mod.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return Fp(out, p_);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_ > static_cast<std::uint64_t>(INT64_MAX) ? 0 : p_);
    if (m == 0) return from_integer(Integer(static_cast<long>(v)));
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p_);
}

PrimeField::Element PrimeField::exact_div(const Element& a, const Element& b) const {
    return a * inverse(b);
}

PrimeField::Element PrimeField::inverse(const Element& a) const { return a.inverse(); }

}  // namespace kres
