#pragma once

// Lower bounds for the vanishing order of resultants: p-adic order against
// the number of common zeros mod p, and the t-adic order along a line.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kres/arith.hpp"
#include "kres/koszul.hpp"
#include "kres/modslice.hpp"
#include "kres/resultant.hpp"

namespace kres {

using IntSequence = PolySequence<IntegerRing>;

PolySequence<PrimeField> reduce_mod_p(const IntSequence& f, std::uint64_t p);

struct ZeroDegreeReport {
    std::uint64_t value = 0;
    std::uint64_t prime = 0;
    MultiDegree nu;
    std::vector<MultiDegree> probes;
    /// Homology ranks of the reduced slice at nu.
    std::vector<std::size_t> homology;
    int escalations = 0;
};

/// dim over F_p of (M / (F mod p) M)_nu, required to agree at nu and every
/// nu + e_p. The hypothesis that the reduced sequence has filter-grade r is
/// certified on these probe degrees only, through H_p = 0 for p >= 2.
/// Throws HypothesisNotCertified otherwise.
ZeroDegreeReport mod_p_zero_degree(const IntSequence& f, const ModuleSpec& m, std::uint64_t p,
                                   Exec exec = Exec::parallel);

struct ChardinReport {
    std::uint64_t zero_degree = 0;
    Order order;
    bool pass = false;
    ResultantValue<IntegerRing> resultant;
    ZeroDegreeReport reduction;
};

/// pass iff val_p(Res) >= the mod-p zero count.
ChardinReport check_chardin(const IntSequence& f, const ModuleSpec& m, std::uint64_t p,
                            Exec exec = Exec::parallel);

// ---------------------------------------------------------------------------
// Univariate helpers over Q (coefficients listed constant term first).

/// Coefficients of the polynomial of degree < values.size() taking
/// values[j] at t = j (Newton divided differences, exact).
std::vector<Rational> interpolate_consecutive(const std::vector<Rational>& values);

Rational evaluate_univariate(const std::vector<Rational>& coeffs, const Rational& t);

/// Index of the lowest nonzero coefficient; infinity for the zero polynomial.
Order lowest_order(const std::vector<Rational>& coeffs);

std::vector<Rational> multiply_univariate(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Quotient and remainder of a / b (b nonzero), trailing zeros trimmed.
std::pair<std::vector<Rational>, std::vector<Rational>> divide_univariate(std::vector<Rational> a,
                                                                          std::vector<Rational> b);

/// E.g. "3*t^2 - t + 1/2"; "0" for the zero polynomial.
std::string format_univariate(const std::vector<Rational>& coeffs, const std::string& var = "t");

// ---------------------------------------------------------------------------

struct DirectionalOptions {
    std::uint64_t seed = 1;
    Exec exec = Exec::parallel;
    /// Random anchors tried for the partition before the exhaustive check.
    int anchor_attempts = 3;
};

struct DirectionalOrderReport {
    IntSequence base;
    IntSequence direction;
    /// R(t) = prod det(phi_p(t))^{(-1)^{p+1}} up to sign; exact when
    /// quotient_exact, otherwise the polynomial part.
    std::vector<Rational> coefficients;
    bool quotient_exact = true;
    Order order;
    /// Per block: det(phi_p(t)) as an interpolated polynomial.
    std::vector<std::vector<Rational>> block_polys;
    /// Sample points t = 0..samples-1 were used for every block.
    std::size_t samples = 0;
    /// The nonzero t at which the partition was fixed.
    long anchor = 0;
    MultiDegree nu;
    /// dim K_0 at nu.
    std::size_t degree_bound = 0;
};

/// t-adic order of Res(F + t G). The partition is fixed at an anchor t* with
/// Res(F + t* G) != 0; every block determinant is then a polynomial in t of
/// degree at most its size and is interpolated exactly over Q.
/// Throws DegenerateLine when R(t) vanishes identically.
DirectionalOrderReport directional_order(const ModuleSpec& m, const IntSequence& f, const IntSequence& g,
                                         const DirectionalOptions& options = {});

/// Serial reference for the sample loop: the same computation with every
/// kernel forced to Exec::serial.
inline DirectionalOrderReport directional_order_serial(const ModuleSpec& m, const IntSequence& f,
                                                       const IntSequence& g, std::uint64_t seed) {
    return directional_order(m, f, g, {seed, Exec::serial, 3});
}

struct OrderBoundReport {
    Order claimed;
    std::vector<DirectionalOrderReport> directions;
    /// Directions redrawn because the line was degenerate.
    std::size_t degenerate_redraws = 0;
    /// Directions that stayed degenerate after all redraws (order infinite).
    std::size_t degenerate_directions = 0;
    Order min_order;
    bool pass = true;
    std::uint64_t seed = 0;
};

/// Integer in [lo, hi] from a 64-bit engine; the same on every platform.
long draw_uniform(std::mt19937_64& rng, long lo, long hi);

/// Random direction: every polynomial is a combination of the standard
/// monomials of its degree with coefficients uniform in [-9, 9], not all zero.
IntSequence random_direction(const ModuleSpec& m, const std::vector<MultiDegree>& degrees, std::mt19937_64& rng);

/// Runs directional_order along `trials` random directions; pass iff every
/// directional order is >= claimed.
OrderBoundReport check_order_bound(const ModuleSpec& m, const IntSequence& f, std::uint64_t claimed,
                                   std::size_t trials, std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace kres
