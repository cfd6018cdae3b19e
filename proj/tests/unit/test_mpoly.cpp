#include <doctest.h>

#include <random>

#include "kres/koszul.hpp"
#include "kres/mpoly.hpp"
#include "../oracles.hpp"

using namespace kres;

namespace {

std::vector<std::string> names(const BlockStructure& s, const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string(s));
    return out;
}

MPoly<IntegerRing> zp(const BlockStructure& s, const std::string& text) { return parse_mpoly(IntegerRing{}, s, text); }

}  // namespace

TEST_CASE("block structure validation") {
    CHECK_THROWS_AS(BlockStructure(std::vector<int>{}), Error);
    CHECK_THROWS_AS(BlockStructure({1, 0}), Error);
    BlockStructure s{2, 1};
    CHECK(s.variable_count() == 5);
    CHECK(s.variable_index(1, 1) == 4);
    CHECK(s.dimension() == 3);
}

TEST_CASE("multidegree of polynomials") {
    BlockStructure s2{1, 1};
    CHECK(zp(s2, "x[1,0]*x[2,1]").multidegree() == MultiDegree{1, 1});
    BlockStructure s1{1};
    CHECK(zp(s1, "x[1,0]^2 + x[1,0]*x[1,1]").multidegree() == MultiDegree{2});
    CHECK_THROWS_AS(zp(s2, "x[1,0] + x[2,0]").multidegree(), NotHomogeneous);
    CHECK_THROWS_AS(MPoly<IntegerRing>(IntegerRing{}, s1).multidegree(), ZeroPolynomial);
}

TEST_CASE("monomial bases in canonical order") {
    BlockStructure s1{1};
    CHECK(names(s1, monomial_basis(s1, {2})) == std::vector<std::string>{"x[1,0]^2", "x[1,0]*x[1,1]", "x[1,1]^2"});
    BlockStructure s2{1, 1};
    CHECK(names(s2, monomial_basis(s2, {1, 1})) ==
          std::vector<std::string>{"x[1,0]*x[2,0]", "x[1,1]*x[2,0]", "x[1,0]*x[2,1]", "x[1,1]*x[2,1]"});
    BlockStructure s3{2, 1};
    CHECK(names(s3, monomial_basis(s3, {1, 0})) == std::vector<std::string>{"x[1,0]", "x[1,1]", "x[1,2]"});
    CHECK(monomial_basis(s2, {-1, 3}).empty());
}

TEST_CASE("monomial_basis count matches the binomial product") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = static_cast<int>(oracle::uniform(rng, 1, 3));
        std::vector<int> n;
        std::vector<int> d;
        Integer expected = 1;
        for (int p = 0; p < q; ++p) {
            n.push_back(static_cast<int>(oracle::uniform(rng, 1, 3)));
            d.push_back(static_cast<int>(oracle::uniform(rng, 0, 4)));
            expected *= binomial(static_cast<unsigned long>(d.back() + n.back()), static_cast<unsigned long>(n.back()));
        }
        BlockStructure s(n);
        auto basis = monomial_basis(s, MultiDegree(d));
        CHECK(Integer(static_cast<unsigned long>(basis.size())) == expected);
        CHECK(monomial_count(s, MultiDegree(d)) == expected);
        for (std::size_t i = 1; i < basis.size(); ++i) CHECK(monomial_less(basis[i - 1], basis[i], s));
    }
}

TEST_CASE("ring axioms and grading on random samples") {
    std::mt19937_64 rng(7);
    BlockStructure s{1, 2};
    auto m = ModuleSpec::free_ring(s);
    for (int i = 0; i < 30; ++i) {
        auto f = oracle::random_poly(rng, m, {1, 1});
        auto g = oracle::random_poly(rng, m, {1, 1});
        auto h = oracle::random_poly(rng, m, {2, 0});
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * h == h * f);
        CHECK((f * h).multidegree() == MultiDegree{3, 1});
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("format then parse reproduces the term sequence") {
    std::mt19937_64 rng(9);
    BlockStructure s{2, 1};
    auto m = ModuleSpec::free_ring(s);
    for (int i = 0; i < 30; ++i) {
        auto f = oracle::random_poly(rng, m, {2, 1}, 50);
        auto text = format_mpoly(f);
        auto g = zp(s, text);
        CHECK(g == f);
        CHECK(format_mpoly(g) == text);
        CHECK(g.terms() == f.terms());
    }
    auto q = parse_mpoly(RationalField{}, BlockStructure{1}, "1/2*x[1,0] - 3/4*x[1,1]");
    CHECK(format_mpoly(q) == "1/2*x[1,0] + -3/4*x[1,1]");
}

TEST_CASE("parser errors") {
    BlockStructure s{1};
    CHECK_THROWS_AS(zp(s, ""), ParseError);
    CHECK_THROWS_AS(zp(s, "x[2,0]"), ParseError);
    CHECK_THROWS_AS(zp(s, "x[1,2]"), ParseError);
    CHECK_THROWS_AS(zp(s, "x[1,0] x[1,1]"), ParseError);
    CHECK_THROWS_AS(zp(s, "3*"), ParseError);
    CHECK(zp(s, "-x[1,0] - -x[1,1]") == zp(s, "x[1,1] - x[1,0]"));
}

TEST_CASE("generic polynomials") {
    BlockStructure s{1};
    auto u = generic_polynomial(s, {1}, 0);
    CHECK(u.term_count() == 2);
    CHECK(format_mpoly(u) == "u[0][0]*x[1,0] + u[0][1]*x[1,1]");
    auto f = specialize(u, std::map<std::size_t, Integer>{{0, 3}, {1, -2}});
    CHECK(f == zp(s, "3*x[1,0] - 2*x[1,1]"));
    CHECK_THROWS_AS(specialize(u, std::map<std::size_t, Integer>{{0, 3}}), MissingAssignment);

    BlockStructure s2{1, 1};
    auto u2 = generic_polynomial(s2, {1, 1}, 2);
    CHECK(u2.term_count() == 4);
    CHECK(u2.ring().variable_name(3) == "u[2][3]");
}

TEST_CASE("specializing the generic system reproduces any sequence") {
    std::mt19937_64 rng(5);
    BlockStructure s{1, 1};
    auto m = ModuleSpec::free_ring(s);
    std::vector<MultiDegree> degs{{1, 1}, {2, 0}, {0, 1}};
    auto sys = generic_system(s, degs);
    for (int i = 0; i < 10; ++i) {
        auto f = oracle::random_sequence(rng, m, degs);
        auto point = coefficient_point(sys, f.polys());
        std::map<std::size_t, Integer> assignment;
        for (std::size_t k = 0; k < point.size(); ++k) assignment[k] = point[k];
        for (std::size_t j = 0; j < degs.size(); ++j) CHECK(specialize(sys.polys[j], assignment) == f[j]);
    }
}

TEST_CASE("lines F + tG") {
    BlockStructure s{1};
    PolySequence<IntegerRing> f(IntegerRing{}, s, {zp(s, "x[1,0]"), zp(s, "x[1,1]^2")}, {{1}, {2}});
    PolySequence<IntegerRing> g(IntegerRing{}, s, {zp(s, "x[1,1]"), zp(s, "x[1,0]*x[1,1]")}, {{1}, {2}});
    auto at0 = f.along(g, 0);
    CHECK(at0[0] == f[0]);
    CHECK(at0[1] == f[1]);
    auto at1 = f.along(g, 1);
    CHECK(at1[0] == f[0] + g[0]);
    CHECK(at1[1] == f[1] + g[1]);
    CHECK_THROWS_AS(PolySequence<IntegerRing>(IntegerRing{}, s, {zp(s, "x[1,0]")}, {{2}}), NotHomogeneous);
    CHECK_THROWS_AS(PolySequence<IntegerRing>(IntegerRing{}, s, {zp(s, "x[1,0]")}, {{1, 0}}), Error);
}
