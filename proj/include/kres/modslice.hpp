#pragma once

// Componentwise free modules M = A[x] or A[x]/I with I a monomial ideal:
// standard-monomial slice bases, Hilbert functions and Hilbert polynomials.

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kres/arith.hpp"
#include "kres/multidegree.hpp"

namespace kres {

class MonomialIdeal {
public:
    /// Keeps a minimal generating set (generators divisible by another are dropped).
    MonomialIdeal(BlockStructure shape, std::vector<Monomial> generators);

    const BlockStructure& shape() const { return shape_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool contains(const Monomial& m) const;
    /// Componentwise maximum of the generator multidegrees.
    MultiDegree max_generator_degree() const;

private:
    BlockStructure shape_;
    std::vector<Monomial> gens_;
};

class ModuleSpec {
public:
    static ModuleSpec free_ring(BlockStructure shape) { return ModuleSpec(std::move(shape), std::nullopt); }
    static ModuleSpec quotient(MonomialIdeal ideal) {
        auto shape = ideal.shape();
        return ModuleSpec(std::move(shape), std::move(ideal));
    }

    const BlockStructure& shape() const { return shape_; }
    const std::optional<MonomialIdeal>& ideal() const { return ideal_; }
    bool is_free() const { return !ideal_ || ideal_->generators().empty(); }
    /// True when m survives in M, i.e. is not in I.
    bool is_standard(const Monomial& m) const { return !ideal_ || !ideal_->contains(m); }
    /// Max generator degree + 1 per block; 1 everywhere for the free ring.
    MultiDegree regularity_offset() const;
    /// M / (m) M, again a monomial quotient.
    ModuleSpec quotient_by(const Monomial& m) const;

private:
    ModuleSpec(BlockStructure shape, std::optional<MonomialIdeal> ideal)
        : shape_(std::move(shape)), ideal_(std::move(ideal)) {}

    BlockStructure shape_;
    std::optional<MonomialIdeal> ideal_;
};

/// Ordered standard-monomial basis of M_nu with a reverse index.
struct SliceBasis {
    MultiDegree degree;
    std::vector<Monomial> monomials;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;

    std::size_t size() const { return monomials.size(); }
    std::optional<std::size_t> find(const Monomial& m) const {
        auto it = index.find(m);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

SliceBasis slice_basis(const ModuleSpec& m, const MultiDegree& nu);

std::size_t hilbert_function(const ModuleSpec& m, const MultiDegree& nu);

/// Polynomial in d_1..d_q agreeing with the Hilbert function at and beyond
/// the verified offset.
class HilbertPolynomial {
public:
    using Coefficients = std::map<std::vector<int>, Rational>;

    HilbertPolynomial(std::size_t q, Coefficients coeffs, MultiDegree offset)
        : q_(q), coeffs_(std::move(coeffs)), offset_(std::move(offset)) {}

    std::size_t variables() const { return q_; }
    const Coefficients& coefficients() const { return coeffs_; }
    /// Grid point from which agreement with the Hilbert function was checked.
    const MultiDegree& offset() const { return offset_; }

    Rational operator()(const MultiDegree& d) const;
    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// E.g. "1/2*d1^2 + 3/2*d1 + 1".
    std::string to_string() const;

private:
    std::size_t q_;
    Coefficients coeffs_;
    MultiDegree offset_;
};

/// Exact interpolation on offset + [0..n_1] x ... x [0..n_q], verified on
/// the grid shifted by one; on failure the offset is doubled (at most four
/// times) before VerificationFailed is thrown.
HilbertPolynomial hilbert_polynomial(const ModuleSpec& m);

/// Relevant dimension: total degree of the Hilbert polynomial (-1 if zero).
int rdim(const ModuleSpec& m);

/// Relevant degree: the constant Hilbert polynomial value. Throws
/// RdegUndefined when rdim(m) > 0.
Integer rdeg(const ModuleSpec& m);

}  // namespace kres
