#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the elimination code of the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "kres/koszul.hpp"
#include "kres/modslice.hpp"
#include "kres/mpoly.hpp"

namespace oracle {

using kres::Integer;
using kres::Rational;
using IntMatrix = std::vector<std::vector<Integer>>;

/// Laplace expansion along the first row; fine up to 7x7.
inline Integer cofactor_det(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a[0][j]) == 0) continue;
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(a[i][k]);
            }
            minor.push_back(std::move(row));
        }
        Integer term = a[0][j] * cofactor_det(minor);
        det += j % 2 == 0 ? term : Integer(-term);
    }
    return det;
}

/// Plain Gaussian elimination over Q with the first nonzero pivot.
inline Rational rational_det(const IntMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& x : a[i]) m[i].push_back(Rational(x));
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Sylvester matrix of two coefficient lists, highest coefficient first.
inline IntMatrix sylvester_matrix(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    IntMatrix s(m + n, std::vector<Integer>(m + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[k];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[k];
    }
    return s;
}

inline Integer sylvester_resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Rational d = rational_det(sylvester_matrix(a, b));
    return Integer(d.get_num());
}

/// Roots of sum_k c[k] z^{deg-k} via the companion matrix.
inline std::vector<std::complex<double>> roots(const std::vector<Integer>& c) {
    const std::size_t n = c.size() - 1;
    if (n == 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    const double lead = c[0].get_d();
    for (std::size_t j = 0; j < n; ++j) comp(0, static_cast<Eigen::Index>(j)) = -c[j + 1].get_d() / lead;
    for (std::size_t i = 1; i < n; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

/// lc(a)^deg b * lc(b)^deg a * prod (alpha_i - beta_j), in floating point.
/// Both leading coefficients must be nonzero.
inline double root_product_resultant(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    const auto ra = roots(a);
    const auto rb = roots(b);
    std::complex<double> prod = std::pow(a[0].get_d(), static_cast<double>(b.size() - 1)) *
                                std::pow(b[0].get_d(), static_cast<double>(a.size() - 1));
    for (const auto& x : ra) {
        for (const auto& y : rb) prod *= x - y;
    }
    return std::abs(prod);
}

// ---------------------------------------------------------------------------
// Instance builders.

inline const kres::BlockStructure& p1() {
    static const kres::BlockStructure s{1};
    return s;
}

/// sum_k c[k] x0^{d-k} x1^k on P^1, d = c.size() - 1.
inline kres::MPoly<kres::IntegerRing> binary_form(const std::vector<Integer>& c) {
    kres::MPoly<kres::IntegerRing> f(kres::IntegerRing{}, p1());
    const auto d = static_cast<std::uint32_t>(c.size() - 1);
    for (std::uint32_t k = 0; k <= d; ++k) f.add_term(kres::Monomial(kres::Exponents{d - k, k}), c[k]);
    return f;
}

inline kres::PolySequence<kres::IntegerRing> binary_pair(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    kres::PolySequence<kres::IntegerRing> s(kres::IntegerRing{}, p1());
    s.push_back(binary_form(a), kres::MultiDegree{static_cast<int>(a.size() - 1)});
    s.push_back(binary_form(b), kres::MultiDegree{static_cast<int>(b.size() - 1)});
    return s;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long nonzero(std::mt19937_64& rng, long lo, long hi) {
    long v = 0;
    while (v == 0) v = uniform(rng, lo, hi);
    return v;
}

/// Coefficients of a random binary form of degree d with nonzero extreme
/// coefficients.
inline std::vector<Integer> random_coeffs(std::mt19937_64& rng, int d, long bound = 9) {
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = uniform(rng, -bound, bound);
    c.front() = nonzero(rng, -bound, bound);
    c.back() = nonzero(rng, -bound, bound);
    return c;
}

/// Random multihomogeneous polynomial: every standard monomial of degree d
/// gets a coefficient in [-bound, bound]; never zero.
inline kres::MPoly<kres::IntegerRing> random_poly(std::mt19937_64& rng, const kres::ModuleSpec& m,
                                                  const kres::MultiDegree& d, long bound = 9) {
    const auto basis = kres::slice_basis(m, d).monomials;
    kres::MPoly<kres::IntegerRing> f(kres::IntegerRing{}, m.shape());
    while (f.is_zero()) {
        for (const auto& mono : basis) f.add_term(mono, Integer(uniform(rng, -bound, bound)));
    }
    return f;
}

inline kres::PolySequence<kres::IntegerRing> random_sequence(std::mt19937_64& rng, const kres::ModuleSpec& m,
                                                             const std::vector<kres::MultiDegree>& degrees,
                                                             long bound = 9) {
    kres::PolySequence<kres::IntegerRing> s(kres::IntegerRing{}, m.shape());
    for (const auto& d : degrees) s.push_back(random_poly(rng, m, d, bound), d);
    return s;
}

/// Value of a polynomial at an integer point (one coordinate per variable).
inline Integer evaluate(const kres::MPoly<kres::IntegerRing>& f, const std::vector<Integer>& point) {
    Integer sum = 0;
    for (const auto& [m, c] : f.term_map()) {
        Integer v = c;
        for (std::size_t k = 0; k < point.size(); ++k) {
            for (std::uint32_t e = 0; e < m[k]; ++e) v *= point[k];
        }
        sum += v;
    }
    return sum;
}

/// Adjusts f by a multiple of one monomial so that f(point) = 0 mod `modulus`
/// (modulus 0 means exactly). The monomial must be nonzero at the point and
/// its value a unit mod `modulus` (or +-1 when exact).
inline kres::MPoly<kres::IntegerRing> plant_zero(kres::MPoly<kres::IntegerRing> f, const kres::Monomial& anchor,
                                                 const std::vector<Integer>& point, const Integer& modulus) {
    kres::MPoly<kres::IntegerRing> one = kres::MPoly<kres::IntegerRing>::monomial(kres::IntegerRing{}, f.shape(), anchor, 1);
    const Integer av = evaluate(one, point);
    const Integer fv = evaluate(f, point);
    Integer shift;
    if (modulus == 0) {
        shift = -fv / av;  // av = +-1
    } else {
        Integer inv;
        mpz_invert(inv.get_mpz_t(), av.get_mpz_t(), modulus.get_mpz_t());
        shift = -fv * inv;
        shift %= modulus;
    }
    f.add_term(anchor, shift);
    return f;
}

}  // namespace oracle
