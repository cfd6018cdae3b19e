#include "kres/interp.hpp"

#include <random>

namespace kres {

EvalSpec::EvalSpec(std::vector<GroupPoint> points, unsigned order) : points_(std::move(points)), order_(order) {
    if (points_.empty()) throw Error("interpolation needs at least one point");
    if (order_ == 0) throw Error("interpolation order T must be positive");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (sgn(points_[i].w) == 0) throw Error("point has w = 0, outside G_a x G_m");
        for (std::size_t j = 0; j < i; ++j) {
            if (points_[i] == points_[j]) throw Error("repeated interpolation point");
        }
    }
}

std::size_t EvalSpec::conditions() const { return points_.size() * derivative_indices(order_).size(); }

MultiDegree EvalSpec::surjectivity_degree() const {
    const int k = static_cast<int>(order_ * points_.size());
    return MultiDegree{k, k};
}

std::vector<DerivativeIndex> derivative_indices(unsigned order) {
    std::vector<DerivativeIndex> out;
    for (unsigned total = 0; total < order; ++total) {
        for (unsigned s2 = 0; s2 <= total; ++s2) out.push_back({total - s2, s2});
    }
    return out;
}

Integer derivative_count(unsigned order, unsigned m) {
    if (order == 0) return 0;
    return binomial(order - 1 + m, m);
}

BlockStructure group_shape() { return BlockStructure{1, 1}; }

namespace {

Rational power(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) r *= x;
    return r;
}

Integer falling(unsigned a, unsigned s) {
    Integer r = 1;
    for (unsigned k = 0; k < s; ++k) r *= static_cast<unsigned long>(a - k);
    return r;
}

}  // namespace

ExactMatrix<RationalField> eval_matrix(const EvalSpec& spec, const MultiDegree& d) {
    if (d.size() != 2 || !d.is_nonnegative()) throw Error("eval_matrix needs a nonnegative bidegree");
    const auto shape = group_shape();
    const auto basis = monomial_basis(shape, d);
    const auto sigmas = derivative_indices(spec.order());
    const std::size_t a1 = shape.variable_index(0, 1);
    const std::size_t b1 = shape.variable_index(1, 1);
    ExactMatrix<RationalField> a(RationalField{}, spec.points().size() * sigmas.size(), basis.size());
    std::size_t row = 0;
    for (const auto& pt : spec.points()) {
        for (const auto& [s1, s2] : sigmas) {
            for (std::size_t c = 0; c < basis.size(); ++c) {
                const unsigned ea = basis[c][a1];
                const unsigned eb = basis[c][b1];
                if (ea < s1) continue;
                Rational v = Rational(falling(ea, s1)) * power(pt.z, ea - s1);
                v *= power(Rational(static_cast<unsigned long>(eb)), s2);
                v *= power(pt.w, eb);
                a(row, c) = v;
            }
            ++row;
        }
    }
    return a;
}

std::vector<std::vector<Integer>> interpolation_slice(const EvalSpec& spec, const MultiDegree& d) {
    return kernel_basis(eval_matrix(spec, d));
}

std::vector<MPoly<IntegerRing>> interpolation_polys(const EvalSpec& spec, const MultiDegree& d) {
    const auto shape = group_shape();
    const auto basis = monomial_basis(shape, d);
    std::vector<MPoly<IntegerRing>> out;
    for (const auto& v : interpolation_slice(spec, d)) {
        MPoly<IntegerRing> f(IntegerRing{}, shape);
        for (std::size_t k = 0; k < v.size(); ++k) f.add_term(basis[k], v[k]);
        out.push_back(std::move(f));
    }
    return out;
}

bool is_surjective(const EvalSpec& spec, const MultiDegree& d) {
    return rank(eval_matrix(spec, d), Exec::serial) == spec.conditions();
}

DegreeCheck ist_degree_check(const EvalSpec& spec) {
    DegreeCheck out;
    out.expected = spec.conditions();
    const auto shape = group_shape();
    const MultiDegree base = spec.surjectivity_degree();
    for (const auto& shift : {MultiDegree{0, 0}, MultiDegree{1, 2}, MultiDegree{2, 1}}) {
        MultiDegree d = base + shift;
        const std::size_t dim = monomial_count(shape, d).get_ui();
        const std::size_t measured = dim - interpolation_slice(spec, d).size();
        out.degrees.push_back(d);
        out.measured.push_back(measured);
        out.pass = out.pass && measured == out.expected;
    }
    return out;
}

DemoReport res_estimate_demo(const EvalSpec& spec, const std::vector<MultiDegree>& degrees, std::size_t samples,
                             std::size_t trials, std::uint64_t seed, Exec exec) {
    if (degrees.size() != 3) throw LengthMismatch("the demo on P^1 x P^1 needs exactly three multidegrees");
    const auto shape = group_shape();
    const auto m = ModuleSpec::free_ring(shape);
    DemoReport out;
    out.degrees = degrees;
    out.seed = seed;
    out.claimed = spec.conditions();
    std::vector<std::vector<MPoly<IntegerRing>>> kernels;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out.surjective.push_back(is_surjective(spec, degrees[i]));
        kernels.push_back(interpolation_polys(spec, degrees[i]));
        out.kernel_dims.push_back(kernels.back().size());
    }
    if (!out.surjective[0] || !out.surjective[1])
        throw HypothesisFailed("evaluation map is not surjective at " + (out.surjective[0] ? degrees[1] : degrees[0]).to_string());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (kernels[i].empty()) throw HypothesisFailed("interpolation slice at " + degrees[i].to_string() + " is zero");
    }

    constexpr std::size_t kMaxResamples = 20;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t rejected = 0;
        while (true) {
            IntSequence triple(IntegerRing{}, shape);
            bool zero = false;
            for (std::size_t i = 0; i < degrees.size(); ++i) {
                MPoly<IntegerRing> f(IntegerRing{}, shape);
                for (const auto& k : kernels[i]) f = f + k.scaled(Integer(draw_uniform(rng, -5, 5)));
                zero = zero || f.is_zero();
                triple.push_back(std::move(f), degrees[i]);
            }
            const std::uint64_t bound_seed = rng();
            if (!zero) {
                try {
                    auto bound = check_order_bound(m, triple, out.claimed, trials, bound_seed, exec);
                    out.pass = out.pass && bound.pass;
                    out.samples.push_back({std::move(triple), std::move(bound), rejected});
                    break;
                } catch (const HypothesisError&) {
                    // Not generically exact along the sampled line; draw again.
                }
            }
            if (++rejected > kMaxResamples)
                throw HypothesisFailed("no usable triple after " + std::to_string(kMaxResamples) + " draws");
        }
    }
    return out;
}

}  // namespace kres
