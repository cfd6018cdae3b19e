#include <doctest.h>

#include "kres/problem.hpp"

using namespace kres;

TEST_CASE("problem files parse into consistent objects") {
    auto pf = parse_problem(R"J({
        "shape": {"q": 2, "n": [2, 1]},
        "module": {"type": "monomial_quotient", "generators": ["x[2,1]"]},
        "ring": "Fp(7)",
        "sequence": [{"poly": "x[1,0]*x[2,0]", "degree": [1, 1]}],
        "budget_seconds": 3
    })J");
    CHECK(pf.shape == BlockStructure{2, 1});
    CHECK(pf.ring.kind == RingSpec::Kind::prime_field);
    CHECK(pf.ring.prime == 7);
    CHECK(rdim(pf.module()) == 2);
    auto f = pf.sequence(PrimeField(7));
    CHECK(f.size() == 1);
    CHECK(f.degree(0) == MultiDegree{1, 1});
}

TEST_CASE("problem file errors") {
    CHECK_THROWS_AS(parse_problem("{"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"ring": "Z"})J"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "ring": "R"})J"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "ring": "Fp(8)"})J"), NotPrime);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"q": 2, "n": [1]}})J"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "sequence": [{"poly": "x[1,0]", "degree": [1, 0]}]})J"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "sequence": [{"poly": "x[1,0]", "degree": [2]}]})J"),
                    NotHomogeneous);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "sequence": [{"poly": "x[3,0]", "degree": [1]}]})J"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "module": {"type": "monomial_quotient",
                                     "generators": ["x[1,0] + x[1,1]"]}})J"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1]}, "interp": {"points": [["0", "1"]], "T": 1}})J"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"J({"shape": {"n": [1, 1]}, "interp": {"points": [["0", "0"]], "T": 1}})J"), Error);
}

TEST_CASE("interp sections") {
    auto pf = parse_problem(R"J({"shape": {"n": [1, 1]},
        "interp": {"points": [["1/2", "3"], [0, 1]], "T": 2, "degrees": [[2, 2], [2, 2], [2, 2]]}})J");
    REQUIRE(pf.interp.has_value());
    CHECK(pf.interp->points.size() == 2);
    CHECK(pf.interp->points[0].z == Rational(1, 2));
    CHECK(pf.interp->spec().conditions() == 6);
    CHECK(pf.interp->samples == 10);
}

TEST_CASE("multidegree arguments") {
    CHECK(parse_multidegree("(1,2)", 2) == MultiDegree{1, 2});
    CHECK(parse_multidegree("3 4", 2) == MultiDegree{3, 4});
    CHECK(parse_multidegree("5", 1) == MultiDegree{5});
    CHECK_THROWS_AS(parse_multidegree("(1,2)", 1), ParseError);
    CHECK_THROWS_AS(parse_multidegree("1,x", 2), ParseError);
}

TEST_CASE("ring names") {
    CHECK(RingSpec::parse("Z").to_string() == "Z");
    CHECK(RingSpec::parse("Q").to_string() == "Q");
    CHECK(RingSpec::parse("Fp(11)").to_string() == "Fp(11)");
    CHECK_THROWS_AS(RingSpec::parse("Fp()"), ParseError);
}
