#pragma once

// Interpolation with derivatives on G_a x G_m inside P^1 x P^1.
//
// Chart: z = x[1,1]/x[1,0], w = x[2,1]/x[2,0]. Derivations (d/dz, w d/dw).
// A multi-index sigma = (s1, s2) acts on z^a w^b as
//   a (a-1) ... (a-s1+1) z^{a-s1} * b^{s2} w^b.

#include <array>
#include <cstdint>
#include <vector>

#include "kres/arith.hpp"
#include "kres/exactla.hpp"
#include "kres/matrix.hpp"
#include "kres/multiplicity.hpp"
#include "kres/mpoly.hpp"

namespace kres {

struct GroupPoint {
    Rational z;
    Rational w;
    bool operator==(const GroupPoint&) const = default;
};

class EvalSpec {
public:
    /// Throws Error for an empty point list, w = 0, repeated points or T = 0.
    EvalSpec(std::vector<GroupPoint> points, unsigned order);

    const std::vector<GroupPoint>& points() const { return points_; }
    unsigned order() const { return order_; }
    /// |Sigma| * #{sigma : |sigma| < T}.
    std::size_t conditions() const;
    /// d_ev = T |Sigma| (1, 1).
    MultiDegree surjectivity_degree() const;

private:
    std::vector<GroupPoint> points_;
    unsigned order_;
};

using DerivativeIndex = std::array<unsigned, 2>;

/// sigma with |sigma| < T in graded lex order: (0,0), (1,0), (0,1), (2,0), ...
std::vector<DerivativeIndex> derivative_indices(unsigned order);

/// #{sigma in N^m : |sigma| < T} = C(T - 1 + m, m).
Integer derivative_count(unsigned order, unsigned m);

/// The interpolation problems live on P^1 x P^1.
BlockStructure group_shape();

/// Rows (point, sigma) with points in input order; columns monomial_basis(d).
ExactMatrix<RationalField> eval_matrix(const EvalSpec& spec, const MultiDegree& d);

/// Basis of the degree-d part of the interpolation ideal, one coefficient
/// vector over monomial_basis(d) per element (deterministic, primitive).
std::vector<std::vector<Integer>> interpolation_slice(const EvalSpec& spec, const MultiDegree& d);

std::vector<MPoly<IntegerRing>> interpolation_polys(const EvalSpec& spec, const MultiDegree& d);

bool is_surjective(const EvalSpec& spec, const MultiDegree& d);

struct DegreeCheck {
    std::size_t expected = 0;
    std::vector<MultiDegree> degrees;
    /// dim Q[x]_d - dim of the interpolation slice, per degree.
    std::vector<std::size_t> measured;
    bool pass = true;
};

/// Compares the codimension of the interpolation slice with |Sigma| T(T+1)/2
/// at d_ev, d_ev + (1, 2) and d_ev + (2, 1).
DegreeCheck ist_degree_check(const EvalSpec& spec);

struct DemoSample {
    IntSequence triple;
    OrderBoundReport bound;
    /// Triples rejected before this one (zero, or not generically exact on the line).
    std::size_t resamples = 0;
};

struct DemoReport {
    std::vector<MultiDegree> degrees;
    std::vector<bool> surjective;
    std::vector<std::size_t> kernel_dims;
    std::uint64_t claimed = 0;
    std::vector<DemoSample> samples;
    std::uint64_t seed = 0;
    bool pass = true;
};

/// Draws random triples from the interpolation slices (kernel combinations
/// with coefficients in [-5, 5]) and checks that every directional order of
/// their resultant is at least |Sigma| T(T+1)/2.
/// Throws HypothesisFailed unless ev is surjective at degrees[0] and degrees[1].
DemoReport res_estimate_demo(const EvalSpec& spec, const std::vector<MultiDegree>& degrees, std::size_t samples,
                             std::size_t trials, std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace kres
