#pragma once

#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "kres/errors.hpp"

namespace kres {

/// Dense row-major matrix over an exact ring, with optional basis labels.
template <class Ring>
class ExactMatrix {
public:
    using Element = typename Ring::Element;

    ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

    static ExactMatrix identity(const Ring& ring, std::size_t n) {
        ExactMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    /// Builds a matrix from nested rows; all rows must have equal length.
    static ExactMatrix from_rows(const Ring& ring, const std::vector<std::vector<Element>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        ExactMatrix m(ring, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Element& at(std::size_t i, std::size_t j) {
        check(i, j);
        return (*this)(i, j);
    }
    const Element& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return (*this)(i, j);
    }

    std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<Element>& data() { return data_; }
    const std::vector<Element>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!ring_.is_zero(x)) return false;
        }
        return true;
    }

    ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        ExactMatrix m(ring_, rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = at(rows[i], cols[j]);
        }
        return m;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    template <class Target, class Map>
    ExactMatrix<Target> map(const Target& target, Map&& phi) const {
        ExactMatrix<Target> m(target, rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data()[k] = phi(data_[k]);
        m.row_labels = row_labels;
        m.col_labels = col_labels;
        return m;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        ExactMatrix c(a.ring_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                if (a.ring_.is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = Element(c(i, j) + x * b(k, j));
            }
        }
        return c;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Plain row-major dump: a "rows cols" header, then one line per row.
    std::string dump() const {
        std::ostringstream out;
        out << rows_ << ' ' << cols_ << '\n';
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j != 0) out << ' ';
                out << ring_.format((*this)(i, j));
            }
            out << '\n';
        }
        return out.str();
    }

    // Labels of the row and column bases; empty when unlabeled.
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
    }

    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

}  // namespace kres
