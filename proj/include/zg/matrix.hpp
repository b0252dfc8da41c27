#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zg/poly.hpp"

namespace zg {

/// Dense matrix over Q(i)[z], row-major.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    PolyMatrix(size_t rows, size_t cols, std::vector<Poly> entries);

    static PolyMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Poly& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Poly& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    /// row_i += q * row_j
    void add_row_multiple(size_t i, size_t j, const Poly& q);
    /// col_i += q * col_j
    void add_col_multiple(size_t i, size_t j, const Poly& q);
    void scale_row(size_t i, const GaussRational& s);

    /// Square determinant by cofactor expansion (small matrices only).
    Poly det() const;
    /// Rank over the rational-function field, fraction-free elimination.
    size_t rank() const;
    /// Matrix with an extra row appended.
    PolyMatrix with_row(const std::vector<Poly>& row) const;

    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<Poly> e_;
};

/// Determinant of the submatrix picked by row and column index sets.
Poly minor_det(const PolyMatrix& m, const std::vector<size_t>& rows,
               const std::vector<size_t>& cols);

} // namespace zg
