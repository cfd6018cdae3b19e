#pragma once

// Block structure of the variables x_{p,i} and the N^q grading.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "kres/extpoly.hpp"

namespace kres {

/// Shape (q; n_1..n_q): block p (1-based in text, 0-based in code) has the
/// n_p + 1 variables x_{p,0}, ..., x_{p,n_p}.
class BlockStructure {
public:
    BlockStructure() = default;
    /// Throws Error unless q >= 1 and every n_p >= 1.
    explicit BlockStructure(std::vector<int> sizes);
    BlockStructure(std::initializer_list<int> sizes) : BlockStructure(std::vector<int>(sizes)) {}

    std::size_t blocks() const { return sizes_.size(); }
    int block_size(std::size_t p) const { return sizes_.at(p); }
    const std::vector<int>& sizes() const { return sizes_; }
    /// Number of variables in block p, i.e. n_p + 1.
    std::size_t block_width(std::size_t p) const { return static_cast<std::size_t>(sizes_.at(p)) + 1; }
    std::size_t variable_count() const { return offsets_.empty() ? 0 : offsets_.back(); }
    /// Index of x_{p,0} in a flat exponent vector.
    std::size_t offset(std::size_t p) const { return offsets_.at(p); }
    std::size_t variable_index(std::size_t p, std::size_t i) const { return offsets_.at(p) + i; }
    /// Sum of the n_p: the dimension of the multiprojective space.
    int dimension() const;

    bool operator==(const BlockStructure& o) const { return sizes_ == o.sizes_; }

private:
    std::vector<int> sizes_;
    std::vector<std::size_t> offsets_;
};

/// Element of Z^q. Slice arithmetic produces negative components, which
/// denote empty slices; MultiDegree therefore stays signed.
class MultiDegree {
public:
    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> v) : v_(std::move(v)) {}
    MultiDegree(std::initializer_list<int> v) : v_(v) {}

    static MultiDegree zero(std::size_t q) { return MultiDegree(std::vector<int>(q, 0)); }
    static MultiDegree ones(std::size_t q) { return MultiDegree(std::vector<int>(q, 1)); }
    static MultiDegree unit(std::size_t q, std::size_t p);

    std::size_t size() const { return v_.size(); }
    int operator[](std::size_t p) const { return v_[p]; }
    int& operator[](std::size_t p) { return v_[p]; }
    const std::vector<int>& values() const { return v_; }
    int total() const;

    bool is_nonnegative() const;
    bool is_zero() const;

    friend MultiDegree operator+(const MultiDegree& a, const MultiDegree& b);
    friend MultiDegree operator-(const MultiDegree& a, const MultiDegree& b);
    friend MultiDegree operator*(int k, const MultiDegree& a);
    friend bool operator==(const MultiDegree& a, const MultiDegree& b) = default;
    /// Strict lexicographic order, for use as a map key only.
    friend bool operator<(const MultiDegree& a, const MultiDegree& b) { return a.v_ < b.v_; }
    /// Componentwise partial order.
    bool leq(const MultiDegree& o) const;

    std::string to_string() const;

private:
    std::vector<int> v_;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Exponents e) : e_(std::move(e)) {}

    static Monomial one(const BlockStructure& shape) { return Monomial(Exponents(shape.variable_count(), 0)); }
    static Monomial variable(const BlockStructure& shape, std::size_t p, std::size_t i);

    const Exponents& exponents() const { return e_; }
    std::uint32_t operator[](std::size_t k) const { return e_[k]; }
    MultiDegree multidegree(const BlockStructure& shape) const;
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    std::string to_string(const BlockStructure& shape) const;

private:
    Exponents e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Canonical order: the last block is most significant; within a block
/// smaller degree first, then lexicographic with larger leading exponents
/// first. Restricted to one multidegree, this is the order produced by
/// monomial_basis.
bool monomial_less(const Monomial& a, const Monomial& b, const BlockStructure& shape);

/// All monomials of multidegree d in canonical order (empty if any d_p < 0).
/// The count is prod_p C(d_p + n_p, n_p).
std::vector<Monomial> monomial_basis(const BlockStructure& shape, const MultiDegree& d);

/// Closed form of |monomial_basis(shape, d)|.
Integer monomial_count(const BlockStructure& shape, const MultiDegree& d);

}  // namespace kres
