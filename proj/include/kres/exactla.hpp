#pragma once

// Exact dense linear algebra: fraction-free (Bareiss) elimination over any
// integral domain, RREF kernels over fields, Smith normal form over Z.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "kres/arith.hpp"
#include "kres/matrix.hpp"
#include "kres/parallel.hpp"

namespace kres {

template <class Ring>
struct Elimination {
    std::size_t rank = 0;
    /// Original row indices in the order they became pivots.
    std::vector<std::size_t> pivot_rows;
    /// Pivot columns, increasing.
    std::vector<std::size_t> pivot_cols;
    /// det of the minor (pivot_rows in pivot order) x pivot_cols.
    typename Ring::Element last_pivot;
    /// False when a column without pivot was met and elimination stopped.
    bool complete = true;
};

namespace kernels {

/// Entries processed per Bareiss step below which the update stays serial.
inline constexpr std::size_t kParallelUpdateThreshold = 512;

/// One Bareiss step: for every row i in [first_row, rows),
///   a(i, l) <- (pivot * a(i, l) - a(i, col) * a(k, l)) / prev   for l > col,
/// then a(i, col) <- 0. Rows are independent, so they are updated in parallel.
template <class Ring>
void bareiss_update(ExactMatrix<Ring>& a, std::size_t k, std::size_t col, std::size_t first_row,
                    const typename Ring::Element& prev, Exec exec) {
    using Element = typename Ring::Element;
    const Ring& ring = a.ring();
    const std::size_t n = a.cols();
    const std::size_t count = a.rows() - first_row;
    const Element pivot = a(k, col);
    const bool unit_prev = prev == ring.one();
    const Exec use = count * (n - col) >= kParallelUpdateThreshold ? exec : Exec::serial;
    for_each_index(use, count, [&](std::size_t r) {
        const std::size_t i = first_row + r;
        Element factor = a(i, col);
        auto row = a.row(i);
        auto prow = a.row(k);
        if (ring.is_zero(factor)) {
            // Only the scaling by pivot / prev remains.
            for (std::size_t l = col + 1; l < n; ++l) {
                if (ring.is_zero(row[l])) continue;
                Element v = row[l] * pivot;
                row[l] = unit_prev ? v : ring.exact_div(v, prev);
            }
        } else {
            for (std::size_t l = col + 1; l < n; ++l) {
                Element v = row[l] * pivot - factor * prow[l];
                row[l] = unit_prev ? v : ring.exact_div(v, prev);
            }
        }
        row[col] = ring.zero();
    });
}

}  // namespace kernels

/// Fraction-free Gaussian elimination with greedy pivoting (Ring::better_pivot).
/// Columns without a pivot are skipped, or end the elimination when
/// stop_at_deficient_column is set.
template <class Ring>
Elimination<Ring> fraction_free_eliminate(ExactMatrix<Ring> a, bool stop_at_deficient_column,
                                          Exec exec = Exec::parallel) {
    using Element = typename Ring::Element;
    const Ring& ring = a.ring();
    Elimination<Ring> out;
    out.last_pivot = ring.one();
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Element prev = ring.one();
    std::size_t k = 0;
    for (std::size_t col = 0; col < a.cols() && k < a.rows(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = k; i < a.rows(); ++i) {
            if (ring.is_zero(a(i, col))) continue;
            if (!best || ring.better_pivot(a(i, col), a(*best, col))) best = i;
        }
        if (!best) {
            if (stop_at_deficient_column) {
                out.complete = false;
                return out;
            }
            continue;
        }
        if (*best != k) {
            std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(*best).begin());
            std::swap(perm[k], perm[*best]);
        }
        kernels::bareiss_update(a, k, col, k + 1, prev, exec);
        prev = a(k, col);
        out.pivot_rows.push_back(perm[k]);
        out.pivot_cols.push_back(col);
        ++k;
    }
    out.rank = k;
    out.last_pivot = prev;
    if (stop_at_deficient_column && k < a.cols()) out.complete = false;
    return out;
}

/// +1 or -1: the sign of the permutation that sorts idx.
inline int sort_sign(std::vector<std::size_t> idx) {
    int sign = 1;
    std::vector<std::size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (auto& v : idx) v = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    std::vector<bool> seen(idx.size(), false);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = idx[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

/// Determinant over an integral domain by fraction-free elimination.
template <class Ring>
typename Ring::Element bareiss_det(const ExactMatrix<Ring>& a, Exec exec = Exec::parallel) {
    if (!a.is_square()) throw Error("bareiss_det: matrix is not square");
    const Ring& ring = a.ring();
    if (a.rows() == 0) return ring.one();
    auto e = fraction_free_eliminate(a, true, exec);
    if (!e.complete) return ring.zero();
    typename Ring::Element det = e.last_pivot;
    if (sort_sign(e.pivot_rows) < 0) det = -det;
    return det;
}

/// Rank over the fraction field of the coefficient ring.
template <class Ring>
std::size_t rank(const ExactMatrix<Ring>& a, Exec exec = Exec::parallel) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    // Eliminating the shorter side keeps the work bounded by min(rows, cols).
    if (a.cols() > a.rows()) return fraction_free_eliminate(a.transposed(), false, exec).rank;
    return fraction_free_eliminate(a, false, exec).rank;
}

template <class Ring>
struct RowSelection {
    /// Selected rows, increasing.
    std::vector<std::size_t> rows;
    /// det of a.submatrix(rows, all columns).
    typename Ring::Element det;
};

/// For a matrix of full column rank, chooses cols() rows forming a
/// nonsingular square block (greedy pivoting). Empty optional when the
/// columns are dependent over the fraction field.
template <class Ring>
std::optional<RowSelection<Ring>> select_pivot_rows(const ExactMatrix<Ring>& a, Exec exec = Exec::parallel) {
    if (a.cols() == 0) return RowSelection<Ring>{{}, a.ring().one()};
    if (a.cols() > a.rows()) return std::nullopt;
    auto e = fraction_free_eliminate(a, true, exec);
    if (!e.complete) return std::nullopt;
    RowSelection<Ring> sel;
    sel.det = e.last_pivot;
    if (sort_sign(e.pivot_rows) < 0) sel.det = -sel.det;
    sel.rows = e.pivot_rows;
    std::sort(sel.rows.begin(), sel.rows.end());
    return sel;
}

/// Reduced row echelon form over a field; returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref_in_place(ExactMatrix<Field>& a) {
    using Element = typename Field::Element;
    const Field& f = a.ring();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::optional<std::size_t> p;
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (!f.is_zero(a(i, c))) {
                p = i;
                break;
            }
        }
        if (!p) continue;
        if (*p != r) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(*p).begin());
        Element inv = f.inverse(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = Element(a(r, j) * inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || f.is_zero(a(i, c))) continue;
            Element factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = Element(a(i, j) - factor * a(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Kernel basis over Q, one vector per free column of the RREF; each vector
/// is denominator-cleared, divided by its content and positive in its free
/// column, e.g. (-2, 1) for [[1, 2], [2, 4]].
std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix<RationalField>& a);
std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix<IntegerRing>& a);

ExactMatrix<RationalField> to_rational(const ExactMatrix<IntegerRing>& a);

struct SmithForm {
    /// Elementary divisors s_1 | s_2 | ... | s_r, all positive.
    std::vector<Integer> divisors;
    std::size_t rank = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

SmithForm smith_normal_form(const ExactMatrix<IntegerRing>& a);

/// Order of Z^ambient_rank / image(a), where a has ambient_rank rows; empty
/// when the cokernel is infinite (rank deficit).
std::optional<Integer> cokernel_content(const ExactMatrix<IntegerRing>& a, std::size_t ambient_rank);

}  // namespace kres
