#pragma once

// Multigraded polynomials over an exact coefficient ring.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kres/arith.hpp"
#include "kres/errors.hpp"
#include "kres/extpoly.hpp"
#include "kres/multidegree.hpp"

namespace kres {

template <class Ring>
class MPoly {
public:
    using Element = typename Ring::Element;
    using TermList = std::vector<std::pair<Monomial, Element>>;

    MPoly(Ring ring, BlockStructure shape) : ring_(std::move(ring)), shape_(std::move(shape)) {}

    static MPoly monomial(Ring ring, BlockStructure shape, const Monomial& m, const Element& c) {
        MPoly f(std::move(ring), std::move(shape));
        f.add_term(m, c);
        return f;
    }

    const Ring& ring() const { return ring_; }
    const BlockStructure& shape() const { return shape_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds c*m to the polynomial, dropping the term if it cancels.
    void add_term(const Monomial& m, const Element& c) {
        if (m.exponents().size() != shape_.variable_count())
            throw Error("monomial does not match block structure");
        if (ring_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = Element(it->second + c);
            if (ring_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Element coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ring_.zero() : it->second;
    }

    /// Terms in canonical monomial order.
    TermList terms() const {
        TermList out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(),
                  [this](const auto& a, const auto& b) { return monomial_less(a.first, b.first, shape_); });
        return out;
    }

    /// Unordered view, for hot loops that do not care about order.
    const std::unordered_map<Monomial, Element, MonomialHash>& term_map() const { return terms_; }

    /// Throws ZeroPolynomial for f = 0 and NotHomogeneous for mixed terms.
    MultiDegree multidegree() const {
        if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no multidegree");
        std::optional<MultiDegree> d;
        for (const auto& [m, c] : terms_) {
            auto md = m.multidegree(shape_);
            if (!d) {
                d = md;
            } else if (!(*d == md)) {
                throw NotHomogeneous("terms of multidegrees " + d->to_string() + " and " + md.to_string());
            }
        }
        return *d;
    }

    bool is_multihomogeneous_of(const MultiDegree& d) const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const auto& t) { return t.first.multidegree(shape_) == d; });
    }

    MPoly scaled(const Element& c) const {
        MPoly r(ring_, shape_);
        for (const auto& [m, v] : terms_) r.add_term(m, Element(v * c));
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, Element(-c));
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.ring_, a.shape_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, Element(ca * cb));
        }
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [m, c] : a.terms_) {
            auto it = b.terms_.find(m);
            if (it == b.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    /// Image under a coefficient ring homomorphism.
    template <class Target, class Map>
    MPoly<Target> map_coefficients(const Target& target, Map&& phi) const {
        MPoly<Target> r(target, shape_);
        for (const auto& [m, c] : terms_) r.add_term(m, phi(c));
        return r;
    }

private:
    Ring ring_;
    BlockStructure shape_;
    std::unordered_map<Monomial, Element, MonomialHash> terms_;
};

/// Variable x_{p,i} with 0-based block index p.
template <class Ring>
MPoly<Ring> variable(const Ring& ring, const BlockStructure& shape, std::size_t p, std::size_t i) {
    return MPoly<Ring>::monomial(ring, shape, Monomial::variable(shape, p, i), ring.one());
}

template <class Ring>
MPoly<Ring> constant(const Ring& ring, const BlockStructure& shape, const typename Ring::Element& c) {
    return MPoly<Ring>::monomial(ring, shape, Monomial::one(shape), c);
}

// ---------------------------------------------------------------------------
// Text format: terms joined by '+' or '-', each term a '*'-separated list of
// an optional coefficient literal and factors x[p,i] or x[p,i]^e, with p
// 1-based. Example: "3*x[1,0]^2*x[2,1] + -2*x[1,1]*x[2,0]".

template <class Ring>
std::string format_mpoly(const MPoly<Ring>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string coeff = f.ring().format(c);
        if (coeff.find_first_of(" +*") != std::string::npos) coeff = "(" + coeff + ")";
        bool is_one = true;
        for (auto e : m.exponents()) is_one = is_one && e == 0;
        out += is_one ? coeff : coeff + "*" + m.to_string(f.shape());
    }
    return out;
}

namespace detail {

class PolyLexer {
public:
    explicit PolyLexer(std::string_view s) : s_(s) {}
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    unsigned long natural() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return std::stoul(std::string(s_.substr(start, pos_ - start)));
    }
    std::string_view literal() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        if (start == pos_) fail("expected a coefficient or a variable");
        return s_.substr(start, pos_ - start);
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class Ring>
MPoly<Ring> parse_mpoly(const Ring& ring, const BlockStructure& shape, std::string_view text) {
    using Element = typename Ring::Element;
    detail::PolyLexer lex(text);
    MPoly<Ring> f(ring, shape);
    if (lex.done()) lex.fail("empty polynomial");
    bool first = true;
    while (!lex.done()) {
        bool negative = false;
        if (!first) {
            char c = lex.peek();
            if (c != '+' && c != '-') lex.fail("expected '+' or '-'");
        }
        while (lex.peek() == '+' || lex.peek() == '-') {
            if (lex.accept('-')) {
                negative = !negative;
            } else {
                lex.accept('+');
            }
        }
        first = false;
        Element coeff = ring.one();
        Exponents e(shape.variable_count(), 0);
        bool factor_seen = false;
        do {
            if (lex.peek() == 'x') {
                lex.expect('x');
                lex.expect('[');
                auto p = lex.natural();
                lex.expect(',');
                auto i = lex.natural();
                lex.expect(']');
                if (p < 1 || p > shape.blocks() || i >= shape.block_width(p - 1))
                    lex.fail("variable x[" + std::to_string(p) + "," + std::to_string(i) + "] out of range");
                unsigned long power = 1;
                if (lex.accept('^')) power = lex.natural();
                e[shape.variable_index(p - 1, i)] += static_cast<std::uint32_t>(power);
            } else {
                coeff = Element(coeff * ring.parse(lex.literal()));
            }
            factor_seen = true;
        } while (lex.accept('*'));
        if (!factor_seen) lex.fail("empty term");
        f.add_term(Monomial(std::move(e)), negative ? Element(-coeff) : coeff);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Generic polynomials U_i = sum_m u[i][rank(m)] * m over Z[u].

using GenericRing = PolyRing<IntegerRing>;

struct GenericSystem {
    GenericRing ring;
    std::vector<MPoly<GenericRing>> polys;
    /// Index of u[i][0] among the ring variables.
    std::vector<std::size_t> offsets;
    /// Monomial supports; u[i][j] is the coefficient of supports[i][j].
    std::vector<std::vector<Monomial>> supports;

    std::size_t variable(std::size_t i, std::size_t rank) const { return offsets.at(i) + rank; }
};

/// Generic polynomials for every multidegree in the list, tagged 0..k-1.
/// Throws Error on a zero multidegree.
GenericSystem generic_system(const BlockStructure& shape, const std::vector<MultiDegree>& degrees);

/// Single generic polynomial with coefficients named u[tag][*].
MPoly<GenericRing> generic_polynomial(const BlockStructure& shape, const MultiDegree& d, std::size_t tag);

/// The point of the u-space whose specialization of the generic system
/// yields the given polynomials (coefficients read off in support order).
template <class Ring>
std::vector<typename Ring::Element> coefficient_point(const GenericSystem& sys, const std::vector<MPoly<Ring>>& polys) {
    if (polys.size() != sys.polys.size()) throw LengthMismatch("coefficient_point: sequence length mismatch");
    std::vector<typename Ring::Element> point;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& m : sys.supports[i]) point.push_back(polys[i].coefficient(m));
        for (const auto& [m, c] : polys[i].term_map()) {
            if (std::find(sys.supports[i].begin(), sys.supports[i].end(), m) == sys.supports[i].end())
                throw NotHomogeneous("polynomial has a term outside the generic support");
        }
    }
    return point;
}

/// Substitutes values for the extension variables of the coefficients.
/// Throws MissingAssignment when a variable occurring in f is not assigned.
template <class Base>
MPoly<Base> specialize(const MPoly<PolyRing<Base>>& f,
                       const std::map<std::size_t, typename Base::Element>& assignment) {
    const auto& ext = f.ring();
    const auto& base = ext.base();
    MPoly<Base> out(base, f.shape());
    for (const auto& [m, c] : f.term_map()) {
        typename Base::Element value = base.zero();
        for (const auto& t : c.terms()) {
            typename Base::Element v = t.coeff;
            for (std::size_t k = 0; k < t.exps.size(); ++k) {
                if (t.exps[k] == 0) continue;
                auto it = assignment.find(k);
                if (it == assignment.end())
                    throw MissingAssignment("no value for " + ext.variable_name(k));
                for (std::uint32_t r = 0; r < t.exps[k]; ++r) v = v * it->second;
            }
            value = value + v;
        }
        out.add_term(m, value);
    }
    return out;
}

/// Extends coefficients into a polynomial extension ring.
template <class Base>
MPoly<PolyRing<Base>> extend(const MPoly<Base>& f, const PolyRing<Base>& ext) {
    return f.map_coefficients(ext, [&](const typename Base::Element& c) { return ext.constant(c); });
}

}  // namespace kres
