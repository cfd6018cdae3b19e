#include "kres/exactla.hpp"

namespace kres {

ExactMatrix<RationalField> to_rational(const ExactMatrix<IntegerRing>& a) {
    return a.map(RationalField{}, [](const Integer& v) { return Rational(v); });
}

std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix<RationalField>& a) {
    ExactMatrix<RationalField> r = a;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        Integer den = 1;
        for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
        std::vector<Integer> w(v.size());
        Integer g = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            w[k] = Integer(v[k].get_num() * (den / v[k].get_den()));
            g = gcd(g, w[k]);
        }
        // g > 0, so the free-column entry stays positive.
        for (auto& x : w) x /= g;
        basis.push_back(std::move(w));
    }
    return basis;
}

std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix<IntegerRing>& a) {
    return kernel_basis(to_rational(a));
}

namespace {

using Grid = std::vector<std::vector<Integer>>;

void add_row_multiple(Grid& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t j = 0; j < m[dst].size(); ++j) {
        if (sgn(m[src][j]) != 0) m[dst][j] -= q * m[src][j];
    }
}

void add_col_multiple(Grid& m, std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : m) {
        if (sgn(row[src]) != 0) row[dst] -= q * row[src];
    }
}

void swap_cols(Grid& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithForm smith_normal_form(const ExactMatrix<IntegerRing>& a) {
    SmithForm out;
    out.rows = a.rows();
    out.cols = a.cols();
    Grid m(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    }
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (sgn(m[i][j]) == 0) continue;
                if (!best || cmpabs(m[i][j], m[best->first][best->second]) < 0) best = {{i, j}};
            }
        }
        if (!best) break;
        std::swap(m[t], m[best->first]);
        swap_cols(m, t, best->second);

        while (true) {
            bool clean = true;
            Integer q;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m[i][t]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                add_row_multiple(m, i, t, q);
                if (sgn(m[i][t]) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m[t][j]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                add_col_multiple(m, j, t, q);
                if (sgn(m[t][j]) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived: move it to (t, t).
                std::size_t bi = t;
                std::size_t bj = t;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (sgn(m[i][t]) != 0 && cmpabs(m[i][t], m[bi][bj]) < 0) {
                        bi = i;
                        bj = t;
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(m[t][j]) != 0 && cmpabs(m[t][j], m[bi][bj]) < 0) {
                        bi = t;
                        bj = j;
                    }
                }
                std::swap(m[t], m[bi]);
                swap_cols(m, t, bj);
                continue;
            }
            // Pivot must divide the trailing block to keep the divisor chain.
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < rows && !offending; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        offending = i;
                        break;
                    }
                }
            }
            if (!offending) break;
            add_row_multiple(m, t, *offending, Integer(-1));
        }
        out.divisors.push_back(abs(m[t][t]));
        ++t;
    }
    out.rank = out.divisors.size();
    return out;
}

std::optional<Integer> cokernel_content(const ExactMatrix<IntegerRing>& a, std::size_t ambient_rank) {
    if (a.rows() != ambient_rank) throw Error("cokernel_content: row count differs from ambient rank");
    auto snf = smith_normal_form(a);
    if (snf.rank < ambient_rank) return std::nullopt;
    Integer content = 1;
    for (const auto& s : snf.divisors) content *= s;
    return content;
}

}  // namespace kres
