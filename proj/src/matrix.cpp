#include "zg/matrix.hpp"

#include "zg/errors.hpp"

namespace zg {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw DomainError("matrix entry count mismatch");
}

PolyMatrix PolyMatrix::identity(size_t n) {
    PolyMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Poly::one();
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix product dimension mismatch");
    PolyMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
        }
    return r;
}

void PolyMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void PolyMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void PolyMatrix::add_row_multiple(size_t i, size_t j, const Poly& q) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) = at(i, k) + q * at(j, k);
}

void PolyMatrix::add_col_multiple(size_t i, size_t j, const Poly& q) {
    for (size_t k = 0; k < rows_; ++k) at(k, i) = at(k, i) + q * at(k, j);
}

void PolyMatrix::scale_row(size_t i, const GaussRational& s) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) = at(i, k) * s;
}

Poly PolyMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of nonsquare matrix");
    if (rows_ == 0) return Poly::one();
    if (rows_ == 1) return at(0, 0);
    Poly acc;
    for (size_t i = 0; i < rows_; ++i) {
        if (at(i, 0).is_zero()) continue;
        PolyMatrix sub(rows_ - 1, cols_ - 1);
        size_t r = 0;
        for (size_t ii = 0; ii < rows_; ++ii) {
            if (ii == i) continue;
            for (size_t jj = 1; jj < cols_; ++jj) sub.at(r, jj - 1) = at(ii, jj);
            ++r;
        }
        Poly term = at(i, 0) * sub.det();
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

size_t PolyMatrix::rank() const {
    PolyMatrix m = *this;
    size_t rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pivot = row;
        while (pivot < rows_ && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) continue;
        m.swap_rows(row, pivot);
        for (size_t i = row + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            // Cross-multiplication keeps entries polynomial.
            Poly p = m.at(row, col), q = m.at(i, col);
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) = m.at(i, j) * p - m.at(row, j) * q;
        }
        ++row;
        ++rank;
    }
    return rank;
}

PolyMatrix PolyMatrix::with_row(const std::vector<Poly>& extra) const {
    if (extra.size() != cols_) throw DomainError("appended row length mismatch");
    PolyMatrix m(rows_ + 1, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (size_t j = 0; j < cols_; ++j) m.at(rows_, j) = extra[j];
    return m;
}

std::string PolyMatrix::str() const {
    std::string out = "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i) out += ",";
        out += "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) out += ",";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Poly minor_det(const PolyMatrix& m, const std::vector<size_t>& rows,
               const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw DomainError("minor must be square");
    PolyMatrix sub(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = m.at(rows[i], cols[j]);
    return sub.det();
}

} // namespace zg
