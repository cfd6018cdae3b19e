#pragma once

// Polynomial extension rings Base[u_0, ..., u_{k-1}] used as coefficient
// rings: the generic-coefficient ring Z[u] and univariate rings like Z[t].

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kres/arith.hpp"
#include "kres/errors.hpp"

namespace kres {

using Exponents = std::vector<std::uint32_t>;

/// Sparse polynomial; terms kept sorted with the lexicographically largest
/// exponent vector first and no zero coefficients.
template <class Coeff>
class Poly {
public:
    struct Term {
        Exponents exps;
        Coeff coeff;
        bool operator==(const Term&) const = default;
    };

    Poly() = default;
    explicit Poly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const { return terms_.front(); }

    unsigned total_degree() const {
        unsigned best = 0;
        for (const auto& t : terms_) {
            unsigned d = 0;
            for (auto e : t.exps) d += e;
            best = std::max(best, d);
        }
        return best;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::map<Exponents, Coeff, std::greater<>> acc;
        for (const auto& x : a.terms_) {
            for (const auto& y : b.terms_) {
                Exponents e(x.exps.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = x.exps[i] + y.exps[i];
                Coeff c = x.coeff * y.coeff;
                auto [it, inserted] = acc.try_emplace(std::move(e), c);
                if (!inserted) it->second += c;
            }
        }
        Poly r;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc) {
            if (!kres::is_zero(c)) r.terms_.push_back({e, std::move(c)});
        }
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    void normalize() {
        std::map<Exponents, Coeff, std::greater<>> acc;
        for (auto& t : terms_) {
            auto [it, inserted] = acc.try_emplace(t.exps, t.coeff);
            if (!inserted) it->second += t.coeff;
        }
        terms_.clear();
        for (auto& [e, c] : acc) {
            if (!kres::is_zero(c)) terms_.push_back({e, c});
        }
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].exps > b.terms_[j].exps)) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].exps > a.terms_[i].exps) {
                auto t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Coeff c = subtract ? Coeff(a.terms_[i].coeff - b.terms_[j].coeff)
                                   : Coeff(a.terms_[i].coeff + b.terms_[j].coeff);
                if (!kres::is_zero(c)) r.terms_.push_back({a.terms_[i].exps, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

template <class Coeff>
bool is_zero(const Poly<Coeff>& p) {
    return p.is_zero();
}

template <class Base>
class PolyRing {
public:
    using BaseElement = typename Base::Element;
    using Element = Poly<BaseElement>;
    using Term = typename Element::Term;
    static constexpr bool kIsField = false;

    PolyRing(Base base, std::vector<std::string> names)
        : base_(std::move(base)), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

    const Base& base() const { return base_; }
    std::size_t variable_count() const { return names_->size(); }
    const std::string& variable_name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& variable_names() const { return *names_; }

    Element zero() const { return {}; }
    Element one() const { return constant(base_.one()); }
    Element constant(const BaseElement& c) const {
        if (base_.is_zero(c)) return {};
        return Element({Term{Exponents(variable_count(), 0), c}});
    }
    Element from_integer(const Integer& v) const { return constant(base_.from_integer(v)); }
    Element variable(std::size_t i) const {
        Exponents e(variable_count(), 0);
        e.at(i) = 1;
        return Element({Term{std::move(e), base_.one()}});
    }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    /// Exact quotient a / b; throws InvariantViolation when b does not divide a.
    Element exact_div(const Element& a, const Element& b) const {
        auto q = try_div(a, b);
        if (!q) throw InvariantViolation("exact polynomial division failed");
        return *q;
    }

    /// Quotient a / b when b divides a (leading-term division in lex order).
    std::optional<Element> try_div(const Element& a, const Element& b) const {
        if (b.is_zero()) return std::nullopt;
        const auto& lb = b.leading();
        std::vector<Term> quotient;
        Element rest = a;
        while (!rest.is_zero()) {
            const auto& lr = rest.leading();
            Exponents e(lr.exps.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (lr.exps[i] < lb.exps[i]) return std::nullopt;
                e[i] = lr.exps[i] - lb.exps[i];
            }
            auto c = base_.try_div(lr.coeff, lb.coeff);
            if (!c) return std::nullopt;
            Element step({Term{e, *c}});
            quotient.push_back({std::move(e), std::move(*c)});
            rest = rest - step * b;
        }
        return Element(std::move(quotient));
    }

    /// Equal up to a unit of the extension ring, i.e. a unit of the base.
    bool associates(const Element& a, const Element& b) const {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if constexpr (Base::kIsField) {
            auto c = base_.exact_div(a.leading().coeff, b.leading().coeff);
            return a == b * constant(c);
        } else {
            return a == b || a == -b;
        }
    }

    bool better_pivot(const Element& a, const Element& b) const {
        if (b.is_zero()) return !a.is_zero();
        if (a.is_zero()) return false;
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) return da < db;
        return a.terms().size() < b.terms().size();
    }

    Element parse(std::string_view text) const { return constant(base_.parse(text)); }

    std::string format(const Element& a) const {
        if (a.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : a.terms()) {
            if (!first) out += " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (t.exps[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += variable_name(i);
                if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
            }
            std::string c = base_.format(t.coeff);
            if (mono.empty()) {
                out += c;
            } else if (c == "1") {
                out += mono;
            } else if (c == "-1") {
                out += "-" + mono;
            } else {
                out += c + "*" + mono;
            }
        }
        return out;
    }

    BaseElement evaluate(const Element& a, std::span<const BaseElement> point) const {
        if (point.size() != variable_count())
            throw MissingAssignment("evaluation point has wrong number of coordinates");
        BaseElement sum = base_.zero();
        for (const auto& t : a.terms()) {
            BaseElement v = t.coeff;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                for (std::uint32_t k = 0; k < t.exps[i]; ++k) v = v * point[i];
            }
            sum = sum + v;
        }
        return sum;
    }

    Element derivative(const Element& a, std::size_t var) const {
        std::vector<Term> out;
        for (const auto& t : a.terms()) {
            if (t.exps.at(var) == 0) continue;
            Term d = t;
            d.coeff = t.coeff * base_.from_integer(Integer(static_cast<unsigned long>(t.exps[var])));
            d.exps[var] -= 1;
            out.push_back(std::move(d));
        }
        return Element(std::move(out));
    }

    bool operator==(const PolyRing& other) const {
        return base_ == other.base_ && *names_ == *other.names_;
    }

private:
    Base base_;
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// gcd of the integer coefficients (0 for the zero polynomial).
inline Integer integer_content(const Poly<Integer>& p) {
    Integer g = 0;
    for (const auto& t : p.terms()) g = gcd(g, t.coeff);
    return g;
}

/// Divides out the integer content and makes the leading coefficient positive.
inline Poly<Integer> primitive_part(const Poly<Integer>& p) {
    if (p.is_zero()) return p;
    Integer g = integer_content(p);
    if (sgn(p.leading().coeff) < 0) g = -g;
    std::vector<Poly<Integer>::Term> terms;
    for (const auto& t : p.terms()) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
        terms.push_back({t.exps, q});
    }
    return Poly<Integer>(std::move(terms));
}

}  // namespace kres
