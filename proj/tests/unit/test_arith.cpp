#include <doctest.h>

#include <random>

#include "kres/arith.hpp"
#include "kres/errors.hpp"
#include "kres/extpoly.hpp"

using namespace kres;

TEST_CASE("val_p examples") {
    CHECK(val_p(50, 5) == Order(2));
    CHECK(val_p(0, 7).is_infinite());
    CHECK(val_p(-27, 3) == Order(3));
    CHECK(val_p(1, 2) == Order(0));
    CHECK_THROWS_AS(val_p(12, 4), NotPrime);
}

TEST_CASE("val_p is additive and ultrametric") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> dist(-5000, 5000);
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        for (int i = 0; i < 200; ++i) {
            Integer a = dist(rng);
            Integer b = dist(rng);
            if (a == 0 || b == 0) continue;
            CHECK(val_p(a * b, p).value() == val_p(a, p).value() + val_p(b, p).value());
            CHECK(val_p(a + b, p) >= std::min(val_p(a, p), val_p(b, p)));
        }
    }
}

TEST_CASE("Order compares infinity last") {
    CHECK(Order(3) < Order::infinity());
    CHECK_FALSE(Order::infinity() < Order(3));
    CHECK(Order::infinity() == Order::infinity());
    CHECK(Order::infinity().to_string() == "inf");
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(18446744073709551555ull));
    CHECK_THROWS_AS(PrimeField(9), NotPrime);
}

TEST_CASE("rational parsing and round trip") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_integer("12a"), ParseError);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int i = 0; i < 100; ++i) {
        Integer n = dist(rng);
        Integer d = dist(rng);
        if (d == 0) continue;
        Rational a(n, d);
        a.canonicalize();
        Rational b = Rational(dist(rng)) + 1001;
        CHECK(Rational(a * b / b) == a);
        CHECK(parse_rational(to_string(a)) == a);
    }
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    auto a = f.from_int(-3);
    CHECK(a.value() == 4);
    CHECK((a * f.inverse(a)).value() == 1);
    CHECK(f.exact_div(f.from_int(6), f.from_int(3)).value() == 2);
    CHECK_FALSE(f.try_div(f.one(), f.zero()).has_value());
    PrimeField big(18446744073709551557ull);
    auto x = big.from_int(-1);
    CHECK((x * x).value() == 1);
}

TEST_CASE("integer ring exact division") {
    IntegerRing z;
    CHECK(z.exact_div(12, -4) == -3);
    CHECK_FALSE(z.try_div(7, 2).has_value());
    CHECK_THROWS_AS(z.exact_div(7, 2), InvariantViolation);
    CHECK(z.associates(-5, 5));
    CHECK_FALSE(z.associates(5, 4));
}

TEST_CASE("polynomial extension rings") {
    PolyRing<IntegerRing> r(IntegerRing{}, {"a", "b"});
    auto a = r.variable(0);
    auto b = r.variable(1);
    auto f = a * a - b * b;
    CHECK(r.exact_div(f, a - b) == a + b);
    CHECK_FALSE(r.try_div(f, a + b + r.one()).has_value());
    CHECK_THROWS_AS(r.exact_div(a, b), InvariantViolation);
    CHECK(r.associates(a - b, b - a));
    CHECK(r.derivative(f, 0) == r.from_integer(2) * a);
    std::vector<Integer> pt{3, 2};
    CHECK(r.evaluate(f, pt) == 5);
    CHECK(primitive_part(r.from_integer(-4) * a + r.from_integer(6) * b) == r.from_integer(2) * a - r.from_integer(3) * b);
}
