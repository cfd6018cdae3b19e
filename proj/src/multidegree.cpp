#include "kres/multidegree.hpp"

#include <algorithm>
#include <numeric>

#include "kres/errors.hpp"

namespace kres {

BlockStructure::BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw Error("block structure needs at least one block");
    offsets_.push_back(0);
    for (int n : sizes_) {
        if (n < 1) throw Error("block sizes must be positive");
        offsets_.push_back(offsets_.back() + static_cast<std::size_t>(n) + 1);
    }
}

int BlockStructure::dimension() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

MultiDegree MultiDegree::unit(std::size_t q, std::size_t p) {
    MultiDegree d = zero(q);
    d.v_.at(p) = 1;
    return d;
}

int MultiDegree::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

bool MultiDegree::is_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool MultiDegree::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size()) throw Error("multidegree length mismatch");
    MultiDegree r = a;
    for (std::size_t p = 0; p < r.size(); ++p) r.v_[p] += b.v_[p];
    return r;
}

MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size()) throw Error("multidegree length mismatch");
    MultiDegree r = a;
    for (std::size_t p = 0; p < r.size(); ++p) r.v_[p] -= b.v_[p];
    return r;
}

MultiDegree operator*(int k, const MultiDegree& a) {
    MultiDegree r = a;
    for (auto& x : r.v_) x *= k;
    return r;
}

bool MultiDegree::leq(const MultiDegree& o) const {
    if (size() != o.size()) throw Error("multidegree length mismatch");
    for (std::size_t p = 0; p < size(); ++p) {
        if (v_[p] > o.v_[p]) return false;
    }
    return true;
}

std::string MultiDegree::to_string() const {
    std::string s = "(";
    for (std::size_t p = 0; p < v_.size(); ++p) {
        if (p != 0) s += ",";
        s += std::to_string(v_[p]);
    }
    return s + ")";
}

Monomial Monomial::variable(const BlockStructure& shape, std::size_t p, std::size_t i) {
    if (p >= shape.blocks() || i >= shape.block_width(p)) throw Error("variable index out of range");
    Exponents e(shape.variable_count(), 0);
    e[shape.variable_index(p, i)] = 1;
    return Monomial(std::move(e));
}

MultiDegree Monomial::multidegree(const BlockStructure& shape) const {
    MultiDegree d = MultiDegree::zero(shape.blocks());
    for (std::size_t p = 0; p < shape.blocks(); ++p) {
        int s = 0;
        for (std::size_t i = 0; i < shape.block_width(p); ++i) s += static_cast<int>(e_[shape.offset(p) + i]);
        d[p] = s;
    }
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] > other.e_[k]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Exponents e(a.e_.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.e_[k] + b.e_[k];
    return Monomial(std::move(e));
}

std::string Monomial::to_string(const BlockStructure& shape) const {
    std::string s;
    for (std::size_t p = 0; p < shape.blocks(); ++p) {
        for (std::size_t i = 0; i < shape.block_width(p); ++i) {
            auto e = e_[shape.variable_index(p, i)];
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += "x[" + std::to_string(p + 1) + "," + std::to_string(i) + "]";
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s.empty() ? "1" : s;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return h;
}

bool monomial_less(const Monomial& a, const Monomial& b, const BlockStructure& shape) {
    for (std::size_t pp = shape.blocks(); pp-- > 0;) {
        const std::size_t off = shape.offset(pp);
        const std::size_t w = shape.block_width(pp);
        std::uint32_t da = 0;
        std::uint32_t db = 0;
        for (std::size_t i = 0; i < w; ++i) {
            da += a[off + i];
            db += b[off + i];
        }
        if (da != db) return da < db;
        for (std::size_t i = 0; i < w; ++i) {
            if (a[off + i] != b[off + i]) return a[off + i] > b[off + i];
        }
    }
    return false;
}

namespace {

// Exponent vectors of length width summing to degree, lexicographically
// descending (x_0^degree first).
void block_exponents(std::size_t width, std::uint32_t degree, Exponents& current, std::size_t pos,
                     std::vector<Exponents>& out) {
    if (pos + 1 == width) {
        current[pos] = degree;
        out.push_back(current);
        return;
    }
    for (std::uint32_t e = degree + 1; e-- > 0;) {
        current[pos] = e;
        block_exponents(width, degree - e, current, pos + 1, out);
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(const BlockStructure& shape, const MultiDegree& d) {
    if (d.size() != shape.blocks()) throw Error("multidegree does not match block structure");
    if (!d.is_nonnegative()) return {};
    std::vector<std::vector<Exponents>> per_block(shape.blocks());
    for (std::size_t p = 0; p < shape.blocks(); ++p) {
        Exponents cur(shape.block_width(p), 0);
        block_exponents(shape.block_width(p), static_cast<std::uint32_t>(d[p]), cur, 0, per_block[p]);
    }
    std::vector<Monomial> out;
    std::vector<std::size_t> idx(shape.blocks(), 0);
    while (true) {
        Exponents e(shape.variable_count());
        for (std::size_t p = 0; p < shape.blocks(); ++p) {
            std::copy(per_block[p][idx[p]].begin(), per_block[p][idx[p]].end(), e.begin() + static_cast<long>(shape.offset(p)));
        }
        out.emplace_back(std::move(e));
        // First block is the fastest-moving digit.
        std::size_t p = 0;
        while (p < shape.blocks() && ++idx[p] == per_block[p].size()) {
            idx[p] = 0;
            ++p;
        }
        if (p == shape.blocks()) break;
    }
    return out;
}

Integer monomial_count(const BlockStructure& shape, const MultiDegree& d) {
    if (!d.is_nonnegative()) return 0;
    Integer c = 1;
    for (std::size_t p = 0; p < shape.blocks(); ++p) {
        c *= binomial(static_cast<unsigned long>(d[p] + shape.block_size(p)),
                      static_cast<unsigned long>(shape.block_size(p)));
    }
    return c;
}

}  // namespace kres
