#include <doctest.h>

#include <random>

#include "kres/koszul.hpp"
#include "kres/multiplicity.hpp"
#include "kres/resultant.hpp"
#include "../oracles.hpp"

using namespace kres;

namespace {

MPoly<IntegerRing> zp(const BlockStructure& s, const std::string& text) { return parse_mpoly(IntegerRing{}, s, text); }

IntSequence seq(const BlockStructure& s, const std::vector<std::string>& polys) {
    std::vector<MPoly<IntegerRing>> fs;
    for (const auto& p : polys) fs.push_back(zp(s, p));
    return IntSequence::from_polys(IntegerRing{}, s, fs);
}

template <class Ring>
void check_complex(const KoszulSlice<Ring>& slice) {
    for (std::size_t p = 1; p < slice.length(); ++p) CHECK((slice.d(p) * slice.d(p + 1)).is_zero());
}

}  // namespace

TEST_CASE("subsets are lexicographic") {
    auto s = subsets_of_size(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<std::size_t>{0, 1});
    CHECK(s[2] == std::vector<std::size_t>{0, 3});
    CHECK(s.back() == std::vector<std::size_t>{2, 3});
    CHECK(subsets_of_size(3, 0).size() == 1);
    CHECK(subsets_of_size(2, 3).empty());
}

TEST_CASE("slice of (x0, x1) at degree 1") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    auto slice = build_slice(m, seq(s, {"x[1,0]", "x[1,1]"}), {1});
    REQUIRE(slice.length() == 2);
    CHECK(slice.dim(0) == 2);
    CHECK(slice.dim(1) == 2);
    CHECK(slice.dim(2) == 0);
    CHECK(slice.d(1) == ExactMatrix<IntegerRing>::identity(IntegerRing{}, 2));
    CHECK(slice.d(2).rows() == 2);
    CHECK(slice.d(2).cols() == 0);
    CHECK(slice.bases[1][0].to_string(s) == "e{1}*1");
    CHECK(homology_ranks(slice) == std::vector<std::size_t>{0, 0, 0});
    CHECK(is_generically_exact(slice));
}

TEST_CASE("Koszul signs at the top level") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    auto slice = build_slice(m, seq(s, {"x[1,0]", "x[1,1]"}), {2});
    // D_2 e{1,2} = x0 e{2} - x1 e{1}.
    REQUIRE(slice.d(2).cols() == 1);
    auto col = slice.d(2);
    Integer sum_e1 = 0;
    Integer sum_e2 = 0;
    for (std::size_t r = 0; r < col.rows(); ++r) {
        const auto& label = slice.bases[1][r];
        if (label.subset == std::vector<std::size_t>{0}) sum_e1 += col(r, 0);
        if (label.subset == std::vector<std::size_t>{1}) sum_e2 += col(r, 0);
    }
    CHECK(sum_e1 == -1);
    CHECK(sum_e2 == 1);
    check_complex(slice);
}

TEST_CASE("degenerate and zero sequences are not exact") {
    BlockStructure s{1};
    auto m = ModuleSpec::free_ring(s);
    auto h = homology_ranks(build_slice(m, seq(s, {"x[1,0]", "x[1,0]"}), {2}));
    CHECK(h[1] > 0);
    IntSequence zero(IntegerRing{}, s);
    zero.push_back(MPoly<IntegerRing>(IntegerRing{}, s), {1});
    zero.push_back(MPoly<IntegerRing>(IntegerRing{}, s), {1});
    CHECK_FALSE(is_generically_exact(build_slice(m, zero, {2})));
}

TEST_CASE("random bilinear triple is exact at the working degree") {
    std::mt19937_64 rng(71);
    BlockStructure s{1, 1};
    auto m = ModuleSpec::free_ring(s);
    std::vector<MultiDegree> degs(3, MultiDegree{1, 1});
    auto nu = choose_nu(m, degs);
    for (int t = 0; t < 5; ++t) {
        auto slice = build_slice(m, oracle::random_sequence(rng, m, degs), nu);
        CHECK(homology_ranks(slice) == std::vector<std::size_t>{0, 0, 0, 0});
    }
}

TEST_CASE("filter regularity on a window") {
    BlockStructure s1{1};
    auto free = ModuleSpec::free_ring(s1);
    IntSequence none(IntegerRing{}, s1);
    CHECK(is_filter_regular(zp(s1, "x[1,0]"), {1}, free, none, default_window(free)).regular);

    BlockStructure s21{2, 1};
    std::vector<Monomial> gens{zp(s21, "x[2,1]").terms().front().first};
    auto m = ModuleSpec::quotient(MonomialIdeal(s21, gens));
    IntSequence none2(IntegerRing{}, s21);
    auto cert = is_filter_regular(zp(s21, "x[2,0]"), {0, 1}, m, none2, default_window(m));
    CHECK(cert.regular);
    CHECK(cert.checked.size() == 9);

    std::vector<Monomial> cross{zp(s1, "x[1,0]*x[1,1]").terms().front().first};
    auto mc = ModuleSpec::quotient(MonomialIdeal(s1, cross));
    auto bad = is_filter_regular(zp(s1, "x[1,0]"), {1}, mc, none, default_window(mc));
    CHECK_FALSE(bad.regular);
    REQUIRE(bad.first_failure.has_value());
    CHECK(bad.kernel_dim == 1);

    // x1 after x0 on the free P^1 ring: the quotient is zero in high degree.
    CHECK(is_filter_regular(zp(s1, "x[1,1]"), {1}, free, seq(s1, {"x[1,0]"}), default_window(free)).regular);
    // x0 after x0 is not regular on k[x0, x1]/(x0).
    CHECK_FALSE(is_filter_regular(zp(s1, "x[1,0]"), {1}, free, seq(s1, {"x[1,0]"}), default_window(free)).regular);
}

TEST_CASE("structural invariants on random slices") {
    std::mt19937_64 rng(73);
    struct Shape {
        ModuleSpec m;
        std::vector<MultiDegree> degs;
    };
    std::vector<Monomial> gens{zp(BlockStructure{2, 1}, "x[2,1]").terms().front().first};
    std::vector<Shape> shapes{
        {ModuleSpec::free_ring(BlockStructure{1}), {{2}, {3}}},
        {ModuleSpec::free_ring(BlockStructure{2}), {{1}, {1}, {2}}},
        {ModuleSpec::free_ring(BlockStructure{1, 1}), {{1, 1}, {1, 1}, {1, 2}}},
        {ModuleSpec::quotient(MonomialIdeal(BlockStructure{2, 1}, gens)), {{1, 0}, {1, 1}, {2, 1}}},
    };
    PrimeField f7(7);
    for (const auto& sh : shapes) {
        for (int t = 0; t < 4; ++t) {
            auto f = oracle::random_sequence(rng, sh.m, sh.degs);
            auto nu = choose_nu(sh.m, sh.degs) + MultiDegree::unit(sh.m.shape().blocks(), 0);
            auto slice = build_slice(sh.m, f, nu);
            check_complex(slice);
            for (std::size_t p = 0; p < slice.bases.size(); ++p) {
                std::size_t expected = 0;
                for (const auto& sub : subsets_of_size(f.size(), p)) {
                    MultiDegree d = nu;
                    for (auto i : sub) d = d - f.degree(i);
                    if (d.is_nonnegative()) expected += hilbert_function(sh.m, d);
                }
                CHECK(slice.dim(p) == expected);
            }
            auto reduced = build_slice(sh.m, reduce_mod_p(f, 7), nu);
            for (std::size_t p = 1; p <= slice.length(); ++p) {
                auto mapped = slice.d(p).map(f7, [&](const Integer& x) { return f7.from_integer(x); });
                CHECK(mapped == reduced.d(p));
            }
            CHECK(build_slice(sh.m, f, nu, Exec::serial).differentials == slice.differentials);
        }
    }
}

TEST_CASE("generic homology vanishes at random specializations") {
    std::mt19937_64 rng(79);
    struct Shape {
        BlockStructure s;
        std::vector<MultiDegree> degs;
    };
    std::vector<Shape> shapes{{BlockStructure{1}, {{1}, {2}}},
                              {BlockStructure{2}, {{1}, {1}, {1}}},
                              {BlockStructure{1, 1}, {{1, 1}, {1, 1}, {1, 1}}}};
    for (const auto& sh : shapes) {
        auto m = ModuleSpec::free_ring(sh.s);
        auto sys = generic_system(sh.s, sh.degs);
        PolySequence<GenericRing> generic(sys.ring, sh.s, sys.polys, sh.degs);
        auto nu = choose_nu(m, sh.degs);
        for (int t = 0; t < 3; ++t) {
            std::map<std::size_t, Integer> u;
            for (std::size_t k = 0; k < sys.ring.variable_count(); ++k) u[k] = oracle::uniform(rng, -50, 50);
            auto f = generic.map_coefficients(IntegerRing{}, [&](const GenericRing::Element& c) {
                std::vector<Integer> pt;
                for (std::size_t k = 0; k < sys.ring.variable_count(); ++k) pt.push_back(u[k]);
                return sys.ring.evaluate(c, pt);
            });
            auto h = homology_ranks(build_slice(m, f, nu));
            for (std::size_t p = 1; p < h.size(); ++p) CHECK(h[p] == 0);
        }
    }
}

TEST_CASE("slice dump") {
    BlockStructure s{1};
    auto slice = build_slice(ModuleSpec::free_ring(s), seq(s, {"x[1,0]", "x[1,1]"}), {1});
    auto text = dump_slice(slice, s, true);
    CHECK(text.find("dims 2 2 0") != std::string::npos);
    CHECK(text.find("D1 2 2") != std::string::npos);
}
