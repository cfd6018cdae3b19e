#include <doctest.h>

#include <random>

#include "kres/resultant.hpp"
#include "../oracles.hpp"

using namespace kres;

namespace {

MPoly<IntegerRing> zp(const BlockStructure& s, const std::string& text) { return parse_mpoly(IntegerRing{}, s, text); }

PolySequence<IntegerRing> seq(const BlockStructure& s, const std::vector<std::string>& polys) {
    std::vector<MPoly<IntegerRing>> fs;
    for (const auto& p : polys) fs.push_back(zp(s, p));
    return PolySequence<IntegerRing>::from_polys(IntegerRing{}, s, fs);
}

Integer res_abs(const ModuleSpec& m, const PolySequence<IntegerRing>& f) { return abs(mresultant(m, f).value); }

}  // namespace

TEST_CASE("Cayley determinant examples") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    std::mt19937_64 rng(83);
    for (int t = 0; t < 20; ++t) {
        long a = oracle::uniform(rng, -9, 9), b = oracle::uniform(rng, -9, 9);
        long c = oracle::uniform(rng, -9, 9), d = oracle::uniform(rng, -9, 9);
        if (a * d - b * c == 0 || (a == 0 && b == 0) || (c == 0 && d == 0)) continue;
        auto f = oracle::binary_pair({a, b}, {c, d});
        auto r = cayley_det(build_slice(m, f, {1}));
        REQUIRE(r.status == CayleyStatus::ok);
        CHECK(abs(*r.value) == std::abs(a * d - b * c));
    }
    auto id = cayley_det(build_slice(m, seq(s, {"x[1,0]", "x[1,1]"}), {1}));
    CHECK(abs(*id.value) == 1);
    auto degenerate = cayley_det(build_slice(m, seq(s, {"x[1,0]", "x[1,0]"}), {2}));
    CHECK(degenerate.status != CayleyStatus::ok);
}

TEST_CASE("choose_nu examples") {
    CHECK(choose_nu(ModuleSpec::free_ring(BlockStructure{1}), {{2}, {3}}) == MultiDegree{4});
    CHECK(choose_nu(ModuleSpec::free_ring(BlockStructure{2}), {{1}, {1}, {1}}) == MultiDegree{1});
    auto nu = choose_nu(ModuleSpec::free_ring(BlockStructure{1, 1}), {{1, 1}, {1, 1}, {1, 1}});
    CHECK(MultiDegree{3, 3}.leq(nu));
}

TEST_CASE("resultant examples") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    CHECK(res_abs(m, seq(s, {"3*x[1,0] - 2*x[1,1]", "x[1,0] + x[1,1]"})) == 5);
    for (long p : {2, 3, 5, 7, 11}) {
        auto f = oracle::binary_pair({1, 0}, {1, p});
        CHECK(res_abs(m, f) == p);
        CHECK(content_oracle(m, f, {1}) == Integer(p));
    }
    CHECK(content_oracle(m, seq(s, {"3*x[1,0] - 2*x[1,1]", "x[1,0] + x[1,1]"}), {1}) == Integer(5));
    CHECK(content_oracle(m, seq(s, {"x[1,0]", "x[1,1]"}), {1}) == Integer(1));

    BlockStructure s2{1, 1};
    auto m2 = ModuleSpec::free_ring(s2);
    auto z = mresultant(m2, seq(s2, {"x[1,0]*x[2,0]", "x[1,0]*x[2,1]", "x[1,1]*x[2,0]"}));
    CHECK(z.vanishes);
    CHECK(z.value == 0);
}

TEST_CASE("resultant errors") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    CHECK_THROWS_AS(mresultant(m, seq(s, {"x[1,0]"})), LengthMismatch);
    CHECK_THROWS_AS(mresultant(m, seq(s, {"x[1,0]", "x[1,1]", "x[1,0]"})), LengthMismatch);
    BlockStructure s2{2};
    // (x0, x0, x0) has H_2 = M/(x0) M in every degree.
    auto bad = seq(s2, {"x[1,0]", "x[1,0]", "x[1,0]"});
    CHECK_THROWS_AS(mresultant(ModuleSpec::free_ring(s2), bad), HigherHomologyNonzero);
}

TEST_CASE("linear systems: resultant is the coefficient determinant") {
    std::mt19937_64 rng(89);
    for (int n : {1, 2, 3}) {
        BlockStructure s{n};
        auto m = ModuleSpec::free_ring(s);
        std::vector<MultiDegree> degs(static_cast<std::size_t>(n) + 1, MultiDegree{1});
        for (int t = 0; t < 10; ++t) {
            auto f = oracle::random_sequence(rng, m, degs);
            oracle::IntMatrix coeffs;
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<Integer> row;
                for (int j = 0; j <= n; ++j) row.push_back(f[i].coefficient(Monomial::variable(s, 0, static_cast<std::size_t>(j))));
                coeffs.push_back(row);
            }
            Integer det = oracle::cofactor_det(coeffs);
            auto r = mresultant(m, f);
            CHECK(abs(r.value) == abs(det));
            CHECK(r.vanishes == (det == 0));
        }
    }
}

TEST_CASE("binary forms agree with the Sylvester determinant") {
    std::mt19937_64 rng(97);
    auto m = ModuleSpec::free_ring(BlockStructure{1});
    for (int t = 0; t < 30; ++t) {
        auto a = oracle::random_coeffs(rng, static_cast<int>(oracle::uniform(rng, 1, 3)));
        auto b = oracle::random_coeffs(rng, static_cast<int>(oracle::uniform(rng, 1, 3)));
        auto r = mresultant(m, oracle::binary_pair(a, b));
        CHECK(abs(r.value) == abs(oracle::sylvester_resultant(a, b)));
    }
}

TEST_CASE("generic resultants") {
    auto m = ModuleSpec::free_ring(BlockStructure{1});
    auto g = generic_resultant(m, {{1}, {1}});
    const auto& r = g.system.ring;
    auto expected = r.variable(0) * r.variable(3) - r.variable(1) * r.variable(2);
    CHECK(r.associates(g.value, expected));

    // Symbolic 3x3 Sylvester determinant for degrees (1, 2): u0 = (a0, a1), u1 = (b0, b1, b2).
    auto g12 = generic_resultant(m, {{1}, {2}});
    const auto& r12 = g12.system.ring;
    auto a0 = r12.variable(0), a1 = r12.variable(1);
    auto b0 = r12.variable(2), b1 = r12.variable(3), b2 = r12.variable(4);
    using Row = std::vector<GenericRing::Element>;
    auto syl = ExactMatrix<GenericRing>::from_rows(r12, {Row{a0, a1, r12.zero()}, Row{r12.zero(), a0, a1}, Row{b0, b1, b2}});
    // Cofactor expansion, written out.
    auto det = syl(0, 0) * (syl(1, 1) * syl(2, 2) - syl(1, 2) * syl(2, 1)) -
               syl(0, 1) * (syl(1, 0) * syl(2, 2) - syl(1, 2) * syl(2, 0)) +
               syl(0, 2) * (syl(1, 0) * syl(2, 1) - syl(1, 1) * syl(2, 0));
    CHECK(r12.associates(g12.value, det));

    CHECK_THROWS_AS(generic_resultant(ModuleSpec::free_ring(BlockStructure{1, 1}), {{1, 1}, {1, 1}, {1, 1}}),
                    SizeLimitExceeded);
}

TEST_CASE("stabilization and escalation") {
    std::mt19937_64 rng(101);
    auto m = ModuleSpec::free_ring(BlockStructure{1, 1});
    std::vector<MultiDegree> degs(3, MultiDegree{1, 1});
    for (int t = 0; t < 5; ++t) {
        auto f = oracle::random_sequence(rng, m, degs);
        auto r = mresultant(m, f);
        CHECK(r.stabilized);
        CHECK(r.probes.size() == 2);
        auto bigger = mresultant(m, f, {r.nu + MultiDegree{1, 1}, Exec::parallel, 4});
        CHECK(abs(bigger.value) == abs(r.value));
    }
    // A working degree that is too small escalates rather than failing.
    auto mq = ModuleSpec::free_ring(BlockStructure{1});
    auto f = oracle::binary_pair({2, 1, 3}, {1, 0, -1});
    auto low = mresultant(mq, f, {MultiDegree{1}, Exec::parallel, 4});
    CHECK(low.escalations >= 1);
    CHECK(abs(low.value) == abs(oracle::sylvester_resultant({2, 1, 3}, {1, 0, -1})));
}
