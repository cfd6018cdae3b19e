#include "kres/modslice.hpp"

#include <algorithm>

#include "kres/errors.hpp"

namespace kres {

MonomialIdeal::MonomialIdeal(BlockStructure shape, std::vector<Monomial> generators) : shape_(std::move(shape)) {
    for (const auto& g : generators) {
        if (g.exponents().size() != shape_.variable_count())
            throw Error("ideal generator does not match block structure");
    }
    // Drop duplicates and generators divisible by another one.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
            if (i == j || !generators[j].divides(generators[i])) continue;
            redundant = !(generators[i] == generators[j]) || j < i;
        }
        if (!redundant) gens_.push_back(generators[i]);
    }
    std::sort(gens_.begin(), gens_.end(),
              [this](const Monomial& a, const Monomial& b) { return monomial_less(a, b, shape_); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MultiDegree MonomialIdeal::max_generator_degree() const {
    MultiDegree d = MultiDegree::zero(shape_.blocks());
    for (const auto& g : gens_) {
        auto gd = g.multidegree(shape_);
        for (std::size_t p = 0; p < d.size(); ++p) d[p] = std::max(d[p], gd[p]);
    }
    return d;
}

MultiDegree ModuleSpec::regularity_offset() const {
    auto q = shape_.blocks();
    if (is_free()) return MultiDegree::ones(q);
    return ideal_->max_generator_degree() + MultiDegree::ones(q);
}

ModuleSpec ModuleSpec::quotient_by(const Monomial& m) const {
    std::vector<Monomial> gens;
    if (ideal_) gens = ideal_->generators();
    gens.push_back(m);
    return quotient(MonomialIdeal(shape_, std::move(gens)));
}

SliceBasis slice_basis(const ModuleSpec& m, const MultiDegree& nu) {
    SliceBasis b;
    b.degree = nu;
    for (auto& mono : monomial_basis(m.shape(), nu)) {
        if (!m.is_standard(mono)) continue;
        b.index.emplace(mono, b.monomials.size());
        b.monomials.push_back(std::move(mono));
    }
    return b;
}

std::size_t hilbert_function(const ModuleSpec& m, const MultiDegree& nu) {
    if (!nu.is_nonnegative()) return 0;
    if (m.is_free()) return monomial_count(m.shape(), nu).get_ui();
    std::size_t count = 0;
    for (const auto& mono : monomial_basis(m.shape(), nu)) count += m.is_standard(mono) ? 1 : 0;
    return count;
}

Rational HilbertPolynomial::operator()(const MultiDegree& d) const {
    Rational sum = 0;
    for (const auto& [e, c] : coeffs_) {
        Rational term = c;
        for (std::size_t p = 0; p < q_; ++p) {
            for (int k = 0; k < e[p]; ++k) term *= d[p];
        }
        sum += term;
    }
    return sum;
}

int HilbertPolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : coeffs_) {
        if (sgn(c) == 0) continue;
        int t = 0;
        for (int x : e) t += x;
        deg = std::max(deg, t);
    }
    return deg;
}

std::string HilbertPolynomial::to_string() const {
    std::vector<std::pair<std::vector<int>, Rational>> terms(coeffs_.begin(), coeffs_.end());
    // Higher total degree first, then lexicographically larger exponents.
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int ta = 0;
        int tb = 0;
        for (int x : a.first) ta += x;
        for (int x : b.first) tb += x;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [e, c] : terms) {
        if (sgn(c) == 0) continue;
        std::string mono;
        for (std::size_t p = 0; p < e.size(); ++p) {
            if (e[p] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "d" + std::to_string(p + 1);
            if (e[p] > 1) mono += "^" + std::to_string(e[p]);
        }
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Rational a = abs(c);
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Coefficients (constant term first) of the Lagrange basis polynomial for
// node k among nodes[0..n].
std::vector<Rational> lagrange_basis(const std::vector<int>& nodes, std::size_t k) {
    std::vector<Rational> poly{Rational(1)};
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == k) continue;
        Rational scale = Rational(1) / Rational(nodes[k] - nodes[j]);
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t a = 0; a < poly.size(); ++a) {
            next[a + 1] += poly[a] * scale;
            next[a] -= poly[a] * scale * nodes[j];
        }
        poly = std::move(next);
    }
    return poly;
}

// Calls fn on every point of the box [0..extent_0] x ... x [0..extent_{q-1}].
template <class Fn>
void for_each_grid_point(const std::vector<int>& extent, Fn&& fn) {
    std::vector<int> g(extent.size(), 0);
    while (true) {
        fn(g);
        std::size_t p = 0;
        while (p < g.size() && ++g[p] > extent[p]) {
            g[p] = 0;
            ++p;
        }
        if (p == g.size()) return;
    }
}

HilbertPolynomial interpolate(const ModuleSpec& m, const MultiDegree& offset) {
    const auto& shape = m.shape();
    const std::size_t q = shape.blocks();
    std::vector<std::vector<std::vector<Rational>>> basis(q);
    for (std::size_t p = 0; p < q; ++p) {
        std::vector<int> nodes;
        for (int k = 0; k <= shape.block_size(p); ++k) nodes.push_back(offset[p] + k);
        for (std::size_t k = 0; k < nodes.size(); ++k) basis[p].push_back(lagrange_basis(nodes, k));
    }
    HilbertPolynomial::Coefficients coeffs;
    for_each_grid_point(shape.sizes(), [&](const std::vector<int>& g) {
        MultiDegree point = offset + MultiDegree(g);
        Rational value(static_cast<unsigned long>(hilbert_function(m, point)));
        if (sgn(value) == 0) return;
        // Expand value * prod_p basis[p][g_p](d_p) into monomials d^a.
        for_each_grid_point(shape.sizes(), [&](const std::vector<int>& a) {
            Rational c = value;
            for (std::size_t p = 0; p < q && sgn(c) != 0; ++p) c *= basis[p][g[p]][a[p]];
            if (sgn(c) != 0) coeffs[a] += c;
        });
    });
    for (auto it = coeffs.begin(); it != coeffs.end();) {
        it = sgn(it->second) == 0 ? coeffs.erase(it) : std::next(it);
    }
    return HilbertPolynomial(q, std::move(coeffs), offset);
}

bool verify(const ModuleSpec& m, const HilbertPolynomial& poly, const MultiDegree& offset) {
    bool ok = true;
    MultiDegree shifted = offset + MultiDegree::ones(offset.size());
    for_each_grid_point(m.shape().sizes(), [&](const std::vector<int>& g) {
        MultiDegree point = shifted + MultiDegree(g);
        if (poly(point) != Rational(static_cast<unsigned long>(hilbert_function(m, point)))) ok = false;
    });
    return ok;
}

}  // namespace

HilbertPolynomial hilbert_polynomial(const ModuleSpec& m) {
    MultiDegree offset = m.regularity_offset();
    for (int attempt = 0; attempt <= 4; ++attempt) {
        auto poly = interpolate(m, offset);
        if (verify(m, poly, offset)) return poly;
        offset = 2 * offset;
    }
    throw VerificationFailed("Hilbert polynomial did not verify after 4 offset doublings");
}

int rdim(const ModuleSpec& m) { return hilbert_polynomial(m).total_degree(); }

Integer rdeg(const ModuleSpec& m) {
    auto poly = hilbert_polynomial(m);
    if (poly.total_degree() > 0) throw RdegUndefined("relevant degree undefined: rdim > 0");
    Rational v = poly(MultiDegree::zero(m.shape().blocks()));
    return Integer(v.get_num());
}

}  // namespace kres
