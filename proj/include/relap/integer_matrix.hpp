/**
 * Dense arbitrary-precision integer matrix with optional face labels on rows
 * and columns. Used for boundary matrices, Laplacians and all exact
 * computations (rank, determinant, characteristic polynomial, Smith form).
 *
 * Entries are boost::multiprecision::cpp_int, so no operation can overflow;
 * desk-scale instances (a few hundred rows) stay fast.
 */

#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relap/face.hpp"

namespace relap {

using Int = boost::multiprecision::cpp_int;

class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("IntegerMatrix: data size mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /** Row labels; empty when the matrix is unlabeled. */
    std::vector<Face> row_labels, col_labels;

    IntegerMatrix transpose() const {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        t.row_labels = col_labels;
        t.col_labels = row_labels;
        return t;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntegerMatrix: product dimension mismatch");
        IntegerMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a.at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Int& bkj = b.at(k, j);
                    if (bkj != 0) c.at(i, j) += aik * bkj;
                }
            }
        c.row_labels = a.row_labels;
        c.col_labels = b.col_labels;
        return c;
    }

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntegerMatrix: sum dimension mismatch");
        IntegerMatrix c(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
        c.row_labels = a.row_labels;
        c.col_labels = a.col_labels;
        return c;
    }

    /** Entry-wise equality (labels ignored). */
    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) {
        return !(a == b);
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    /**
     * Text dump: first line "rows cols", then the entries row-major (one row
     * per line), then one line per axis listing the face labels.
     */
    void write_text(std::ostream& os) const {
        os << rows_ << ' ' << cols_ << '\n';
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ' ';
                os << at(i, j);
            }
            os << '\n';
        }
        auto write_labels = [&os](const char* axis, const std::vector<Face>& labels) {
            os << axis << ':';
            for (const auto& f : labels) os << ' ' << f.to_string();
            os << '\n';
        };
        write_labels("rows", row_labels);
        write_labels("cols", col_labels);
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

} // namespace relap
