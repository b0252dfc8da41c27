#include "zg/smith.hpp"

#include "zg/errors.hpp"

namespace zg {

std::vector<Poly> SmithDecomposition::invariant_factors() const {
    std::vector<Poly> out;
    size_t n = std::min(d.rows(), d.cols());
    for (size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Smallest-degree nonzero entry of the trailing block, if any.
bool find_pivot(const PolyMatrix& m, size_t s, size_t& pi, size_t& pj) {
    int best = -1;
    for (size_t i = s; i < m.rows(); ++i)
        for (size_t j = s; j < m.cols(); ++j) {
            const Poly& e = m.at(i, j);
            if (e.is_zero()) continue;
            if (best < 0 || e.degree() < best) {
                best = e.degree();
                pi = i;
                pj = j;
            }
        }
    return best >= 0;
}

bool row_col_cleared(const PolyMatrix& m, size_t s) {
    for (size_t i = s + 1; i < m.rows(); ++i)
        if (!m.at(i, s).is_zero()) return false;
    for (size_t j = s + 1; j < m.cols(); ++j)
        if (!m.at(s, j).is_zero()) return false;
    return true;
}

} // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& a) {
    SmithDecomposition out{PolyMatrix::identity(a.rows()), a, PolyMatrix::identity(a.cols())};
    PolyMatrix& d = out.d;
    PolyMatrix& u = out.u;
    PolyMatrix& v = out.v;

    const size_t steps = std::min(a.rows(), a.cols());
    for (size_t s = 0; s < steps; ++s) {
        size_t pi = s, pj = s;
        if (!find_pivot(d, s, pi, pj)) break; // trailing block is zero
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        v.swap_cols(s, pj);

        while (true) {
            // Reduce the pivot column, then the pivot row, by division.
            for (size_t i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s).is_zero()) continue;
                Poly q = Poly::divmod(d.at(i, s), d.at(s, s)).first;
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
            }
            for (size_t j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j).is_zero()) continue;
                Poly q = Poly::divmod(d.at(s, j), d.at(s, s)).first;
                d.add_col_multiple(j, s, -q);
                v.add_col_multiple(j, s, -q);
            }
            if (!row_col_cleared(d, s)) {
                // A remainder survived; move the smallest entry back to the
                // pivot and repeat. Degrees strictly decrease, so this ends.
                find_pivot(d, s, pi, pj);
                d.swap_rows(s, pi);
                u.swap_rows(s, pi);
                d.swap_cols(s, pj);
                v.swap_cols(s, pj);
                continue;
            }
            // Divisibility sweep: the pivot must divide the whole block.
            bool fixed = false;
            for (size_t i = s + 1; i < d.rows() && !fixed; ++i)
                for (size_t j = s + 1; j < d.cols() && !fixed; ++j) {
                    if (d.at(i, j).is_zero()) continue;
                    if (!Poly::divmod(d.at(i, j), d.at(s, s)).second.is_zero()) {
                        d.add_row_multiple(s, i, Poly::one());
                        u.add_row_multiple(s, i, Poly::one());
                        fixed = true;
                    }
                }
            if (!fixed) break;
        }
        if (!d.at(s, s).is_monic()) {
            GaussRational inv = d.at(s, s).leading().inv();
            d.scale_row(s, inv);
            u.scale_row(s, inv);
        }
    }
    return out;
}

} // namespace zg
