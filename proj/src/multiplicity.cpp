#include "kres/multiplicity.hpp"

#include <algorithm>

namespace kres {

PolySequence<PrimeField> reduce_mod_p(const IntSequence& f, std::uint64_t p) {
    PrimeField fp(p);
    return f.map_coefficients(fp, [&](const Integer& c) { return fp.from_integer(c); });
}

ZeroDegreeReport mod_p_zero_degree(const IntSequence& f, const ModuleSpec& m, std::uint64_t p, Exec exec) {
    auto reduced = reduce_mod_p(f, p);
    ZeroDegreeReport out;
    out.prime = p;
    MultiDegree nu = choose_nu(m, f.degrees());
    const std::size_t q = m.shape().blocks();
    constexpr int kMaxEscalations = 4;
    for (int round = 0; round <= kMaxEscalations; ++round) {
        std::vector<MultiDegree> degrees{nu};
        for (std::size_t k = 0; k < q; ++k) degrees.push_back(nu + MultiDegree::unit(q, k));
        std::vector<std::size_t> values;
        std::vector<std::size_t> first_ranks;
        for (const auto& d : degrees) {
            auto h = homology_ranks(build_slice(m, reduced, d, exec), exec);
            for (std::size_t k = 2; k < h.size(); ++k) {
                if (h[k] != 0)
                    throw HypothesisNotCertified("reduction mod " + std::to_string(p) + " has H_" +
                                                 std::to_string(k) + " != 0 at " + d.to_string() +
                                                 "; filter-grade hypothesis not certified");
            }
            if (first_ranks.empty()) first_ranks = h;
            values.push_back(h[0]);
        }
        if (std::all_of(values.begin(), values.end(), [&](std::size_t v) { return v == values.front(); })) {
            out.value = values.front();
            out.nu = nu;
            out.probes.assign(degrees.begin() + 1, degrees.end());
            out.homology = std::move(first_ranks);
            out.escalations = round;
            return out;
        }
        nu = 2 * nu;
    }
    throw HypothesisNotCertified("zero count mod " + std::to_string(p) + " did not stabilize");
}

ChardinReport check_chardin(const IntSequence& f, const ModuleSpec& m, std::uint64_t p, Exec exec) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    ChardinReport out;
    out.reduction = mod_p_zero_degree(f, m, p, exec);
    out.zero_degree = out.reduction.value;
    ResultantOptions options;
    options.exec = exec;
    out.resultant = mresultant(m, f, options);
    out.order = out.resultant.vanishes ? Order::infinity() : val_p(out.resultant.value, p);
    out.pass = out.order >= Order(out.zero_degree);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

std::vector<Rational> interpolate_consecutive(const std::vector<Rational>& values) {
    const std::size_t n = values.size();
    // Divided differences on the nodes 0, 1, ..., n-1.
    std::vector<Rational> a = values;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = n - 1; j >= k; --j) {
            a[j] = (a[j] - a[j - 1]) / Rational(static_cast<long>(k));
            if (j == k) break;
        }
    }
    // Horner on the Newton form: p = a0 + (t - 0)(a1 + (t - 1)(a2 + ...)).
    std::vector<Rational> p;
    for (std::size_t k = n; k-- > 0;) {
        // p <- p * (t - k) + a[k]
        std::vector<Rational> next(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] -= p[i] * static_cast<long>(k);
        }
        next[0] += a[k];
        p = std::move(next);
    }
    trim(p);
    return p;
}

Rational evaluate_univariate(const std::vector<Rational>& coeffs, const Rational& t) {
    Rational v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
    return v;
}

Order lowest_order(const std::vector<Rational>& coeffs) {
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) != 0) return Order(k);
    }
    return Order::infinity();
}

std::vector<Rational> multiply_univariate(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    trim(c);
    return c;
}

std::pair<std::vector<Rational>, std::vector<Rational>> divide_univariate(std::vector<Rational> a,
                                                                          std::vector<Rational> b) {
    trim(a);
    trim(b);
    if (b.empty()) throw InvariantViolation("univariate division by zero");
    if (a.size() < b.size()) return {{}, a};
    std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    trim(q);
    trim(a);
    return {q, a};
}

std::string format_univariate(const std::vector<Rational>& coeffs, const std::string& var) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (sgn(c) == 0) continue;
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        Rational a = abs(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
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

// ---------------------------------------------------------------------------

long draw_uniform(std::mt19937_64& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

IntSequence random_direction(const ModuleSpec& m, const std::vector<MultiDegree>& degrees, std::mt19937_64& rng) {
    while (true) {
        IntSequence g(IntegerRing{}, m.shape());
        bool nonzero = false;
        for (const auto& d : degrees) {
            MPoly<IntegerRing> poly(IntegerRing{}, m.shape());
            for (const auto& mono : slice_basis(m, d).monomials) poly.add_term(mono, Integer(draw_uniform(rng, -9, 9)));
            nonzero = nonzero || !poly.is_zero();
            g.push_back(std::move(poly), d);
        }
        if (nonzero) return g;
    }
}

DirectionalOrderReport directional_order(const ModuleSpec& m, const IntSequence& f, const IntSequence& g,
                                         const DirectionalOptions& options) {
    if (g.size() != f.size()) throw LengthMismatch("direction has a different length than the sequence");
    const Exec exec = options.exec;
    auto line = [&](long t) { return f.along(g, Integer(t)); };
    std::mt19937_64 rng(options.seed);
    ResultantOptions res_options;
    res_options.exec = exec;

    std::optional<ResultantValue<IntegerRing>> fixed;
    long anchor = 0;
    for (int attempt = 0; attempt < options.anchor_attempts && !fixed; ++attempt) {
        const long t = draw_uniform(rng, 1, 1000);
        auto res = mresultant(m, line(t), res_options);
        if (!res.vanishes) {
            fixed = std::move(res);
            anchor = t;
        }
    }
    if (!fixed) {
        // R(t) has degree at most dim K_0, so it cannot vanish at that many
        // nonzero points unless it is identically zero.
        const MultiDegree nu0 = choose_nu(m, f.degrees());
        const std::size_t bound = build_slice(m, line(1), nu0, exec).dim(0);
        for (long t = 1; t <= static_cast<long>(bound) + 1 && !fixed; ++t) {
            auto c = cayley_det(build_slice(m, line(t), nu0, exec), exec);
            if (c.status != CayleyStatus::ok) continue;
            auto res = mresultant(m, line(t), res_options);
            if (!res.vanishes) {
                fixed = std::move(res);
                anchor = t;
            }
        }
        if (!fixed) throw DegenerateLine("resultant vanishes identically along the line");
    }

    DirectionalOrderReport out{f, g, {}, true, Order::infinity(), {}, 0, anchor, fixed->nu, fixed->k0_dim};
    const auto& cert = fixed->partition;
    const std::size_t levels = cert.rows.size();
    std::size_t largest = 0;
    for (const auto& cols : cert.columns) largest = std::max(largest, cols.size());
    out.samples = largest + 1;

    std::vector<std::vector<Rational>> values(levels, std::vector<Rational>(out.samples));
    for_each_index(exec, out.samples, [&](std::size_t j) {
        auto slice = build_slice(m, line(static_cast<long>(j)), out.nu, Exec::serial);
        for (std::size_t p = 0; p < levels; ++p) {
            auto block = slice.differentials[p].submatrix(cert.rows[p], cert.columns[p]);
            values[p][j] = Rational(bareiss_det(block, Exec::serial));
        }
    });

    std::vector<Rational> num{Rational(1)};
    std::vector<Rational> den{Rational(1)};
    long order = 0;
    for (std::size_t p = 0; p < levels; ++p) {
        auto poly = interpolate_consecutive(values[p]);
        auto ord = lowest_order(poly);
        // Nonzero at the anchor, so never identically zero.
        if (ord.is_infinite()) throw InvariantViolation("block determinant vanishes on the whole line");
        if (p % 2 == 0) {  // level p + 1 odd
            num = multiply_univariate(num, poly);
            order += static_cast<long>(ord.value());
        } else {
            den = multiply_univariate(den, poly);
            order -= static_cast<long>(ord.value());
        }
        out.block_polys.push_back(std::move(poly));
    }
    // The interpolants must reproduce the resultant computed at the anchor.
    Rational at_anchor = evaluate_univariate(num, Rational(anchor)) / evaluate_univariate(den, Rational(anchor));
    if (abs(at_anchor) != abs(Rational(fixed->value)))
        throw InvariantViolation("interpolated R(t) disagrees with the resultant at t = " + std::to_string(anchor));
    if (order < 0) throw InvariantViolation("negative t-adic order along the line");
    auto [quotient, remainder] = divide_univariate(num, den);
    out.quotient_exact = remainder.empty();
    out.coefficients = std::move(quotient);
    out.order = Order(static_cast<std::uint64_t>(order));
    return out;
}

OrderBoundReport check_order_bound(const ModuleSpec& m, const IntSequence& f, std::uint64_t claimed,
                                   std::size_t trials, std::uint64_t seed, Exec exec) {
    constexpr int kRedraws = 10;
    OrderBoundReport out;
    out.claimed = Order(claimed);
    out.min_order = Order::infinity();
    out.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        bool done = false;
        for (int attempt = 0; attempt < kRedraws && !done; ++attempt) {
            auto g = random_direction(m, f.degrees(), rng);
            DirectionalOptions options;
            options.seed = rng();
            options.exec = exec;
            try {
                auto report = directional_order(m, f, g, options);
                out.min_order = std::min(out.min_order, report.order);
                out.directions.push_back(std::move(report));
                done = true;
            } catch (const DegenerateLine&) {
                ++out.degenerate_redraws;
            }
        }
        if (!done) ++out.degenerate_directions;
    }
    out.pass = out.min_order >= out.claimed;
    return out;
}

}  // namespace kres
