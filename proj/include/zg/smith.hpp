#pragma once

#include "zg/matrix.hpp"

namespace zg {

/// U * A * V = D with U, V unimodular over Q(i)[z] (constant nonzero
/// determinants) and D diagonal, entries monic with d_i | d_{i+1}.
struct SmithDecomposition {
    PolyMatrix u, d, v;

    /// Diagonal entries up to min(rows, cols), including trailing zeros.
    std::vector<Poly> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const PolyMatrix& a);

} // namespace zg
