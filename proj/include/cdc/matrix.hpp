#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument if the entry count or any entry is invalid.
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

    static Matrix identity(FieldPtr field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Element>& entries() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
               (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->order() == b.field_->order()));
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Element factor);

/// (A | B); row counts must agree.
Matrix hconcat(const Matrix& a, const Matrix& b);
/// A stacked over B; column counts must agree.
Matrix vconcat(const Matrix& a, const Matrix& b);

/// Gauss-Jordan elimination on a raw row-major buffer. Returns the rank; when
/// `pivots` is given it receives the 0-based pivot columns. Afterwards the first
/// `rank` rows hold the reduced row echelon form and the rest are zero.
std::size_t rref_in_place(const Field& field, std::span<Element> data, std::size_t rows, std::size_t cols,
                          std::vector<std::size_t>* pivots = nullptr);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // 0-based, strictly increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Writes `q=<q> rows=<r> cols=<c>` followed by one line per row.
void write_matrix(std::ostream& out, const Matrix& m);

/// Reads one matrix block. Blank and `#` lines before the header are skipped.
/// `field` may be null, in which case the field is built from the header's q.
Matrix read_matrix(std::istream& in, FieldPtr field = nullptr);

}  // namespace cdc
