#include "zg/formula.hpp"

#include "zg/errors.hpp"

namespace zg {

PpFormula PpFormula::divides(Poly a) {
    PpFormula f;
    f.kind_ = Kind::Divides;
    f.scalar_ = std::move(a);
    return f;
}

PpFormula PpFormula::ann(Poly b) {
    PpFormula f;
    f.kind_ = Kind::Ann;
    f.scalar_ = std::move(b);
    return f;
}

PpFormula PpFormula::conj(PpFormula l, PpFormula r) {
    PpFormula f;
    f.kind_ = Kind::Conj;
    f.left_ = std::make_shared<PpFormula>(std::move(l));
    f.right_ = std::make_shared<PpFormula>(std::move(r));
    return f;
}

PpFormula PpFormula::sum(PpFormula l, PpFormula r) {
    PpFormula f;
    f.kind_ = Kind::Sum;
    f.left_ = std::make_shared<PpFormula>(std::move(l));
    f.right_ = std::make_shared<PpFormula>(std::move(r));
    return f;
}

PpFormula PpFormula::matrix_form(size_t rows, size_t cols, std::vector<Poly> entries,
                                 std::vector<Poly> rhs) {
    if (rows == 0 || cols == 0) throw DomainError("matrix form needs positive dimensions");
    if (entries.size() != rows * cols) throw DomainError("matrix form entry count mismatch");
    if (rhs.size() != cols) throw DomainError("matrix form row vector length mismatch");
    PpFormula f;
    f.kind_ = Kind::MatrixForm;
    f.rows_ = rows;
    f.cols_ = cols;
    f.entries_ = std::move(entries);
    f.rhs_ = std::move(rhs);
    return f;
}

std::string PpFormula::str() const {
    switch (kind_) {
    case Kind::Divides:
        return "div(" + scalar_.str() + ")";
    case Kind::Ann:
        return "ann(" + scalar_.str() + ")";
    case Kind::Conj:
        return "(" + left_->str() + " & " + right_->str() + ")";
    case Kind::Sum:
        return "(" + left_->str() + " + " + right_->str() + ")";
    case Kind::MatrixForm: {
        std::string ys;
        for (size_t i = 1; i <= rows_; ++i) ys += (i > 1 ? " y" : "y") + std::to_string(i);
        std::string mat = "[";
        for (size_t i = 0; i < rows_; ++i) {
            if (i) mat += ",";
            mat += "[";
            for (size_t j = 0; j < cols_; ++j) {
                if (j) mat += ",";
                mat += entry(i, j).str();
            }
            mat += "]";
        }
        mat += "]";
        std::string row = "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) row += ",";
            row += rhs_[j].str();
        }
        row += "]";
        return "E " + ys + " : [" + ys + "]*" + mat + " = x*" + row;
    }
    }
    return {};
}

} // namespace zg
