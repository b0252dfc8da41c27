#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zg/poly.hpp"

namespace zg {

/// Positive-primitive formula in one free variable x over Q(i)[z].
///
/// Divides(a) is a|x, i.e. exists y (y*a = x); Divides(0) is x = 0.
/// Ann(b) is x*b = 0. MatrixForm is exists y1..yk (y A = x b) for a k-by-l
/// matrix A and a length-l row b.
class PpFormula {
public:
    enum class Kind { Divides, Ann, Conj, Sum, MatrixForm };

    static PpFormula divides(Poly a);
    static PpFormula ann(Poly b);
    static PpFormula conj(PpFormula l, PpFormula r);
    static PpFormula sum(PpFormula l, PpFormula r);
    /// rows = k (bound variables), cols = l; entries row-major; rhs length l.
    /// Throws on inconsistent dimensions.
    static PpFormula matrix_form(size_t rows, size_t cols, std::vector<Poly> entries,
                                 std::vector<Poly> rhs);

    Kind kind() const { return kind_; }
    const Poly& scalar() const { return scalar_; } // Divides / Ann
    const PpFormula& left() const { return *left_; }
    const PpFormula& right() const { return *right_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Poly& entry(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<Poly>& rhs() const { return rhs_; }

    /// Canonical parenthesized DSL form; parsing it reproduces the AST.
    std::string str() const;

private:
    PpFormula() = default;
    Kind kind_ = Kind::Divides;
    Poly scalar_;
    std::shared_ptr<const PpFormula> left_, right_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> entries_;
    std::vector<Poly> rhs_;
};

} // namespace zg
