#pragma once

// Independent oracles for the acceptance and property suites. Everything in
// here deliberately avoids the code paths it is used to check: no Smith
// normal form, no formula normalization.

#include <optional>
#include <set>
#include <vector>

#include "zg/cuts.hpp"
#include "zg/formula.hpp"
#include "zg/matrix.hpp"
#include "zg/semantics.hpp"

namespace zgoracle {

using namespace zg;

// ---- determinantal divisors ----------------------------------------------

inline void subsets_of_size(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur(k);
    auto rec = [&](auto&& self, size_t start, size_t depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

/// Monic gcd of all j-by-j minors, or zero when all of them vanish.
inline Poly determinantal_divisor(const PolyMatrix& m, size_t j) {
    std::vector<std::vector<size_t>> rows, cols;
    subsets_of_size(m.rows(), j, rows);
    subsets_of_size(m.cols(), j, cols);
    Poly acc = Poly::zero();
    for (auto& r : rows)
        for (auto& c : cols) {
            Poly d = minor_det(m, r, c);
            if (d.is_zero()) continue;
            acc = acc.is_zero() ? d.monic() : Poly::gcd(acc, d);
            if (acc.is_unit()) return Poly::one();
        }
    return acc;
}

// ---- matrix-form evaluation without normalization ------------------------

constexpr long kInfiniteValuation = 1L << 30;

/// Least multiplicity at t over the s-by-s minors of A taken from any rows
/// and columns; 0 for s = 0, "infinite" when every such minor vanishes.
inline long min_minor_valuation(const PolyMatrix& a, const GaussRational& t, size_t s) {
    if (s == 0) return 0;
    if (s > a.rows() || s > a.cols()) return kInfiniteValuation;
    std::vector<std::vector<size_t>> rows, cols;
    subsets_of_size(a.rows(), s, rows);
    subsets_of_size(a.cols(), s, cols);
    long best = kInfiniteValuation;
    for (auto& r : rows)
        for (auto& c : cols) {
            Poly d = minor_det(a, r, c);
            if (d.is_zero()) continue;
            best = std::min(best, static_cast<long>(d.multiplicity_at(t)));
        }
    return best;
}

/// Same, over minors of [A; b] forced to use the appended b row.
inline long min_minor_valuation_using_last_row(const PolyMatrix& ab, const GaussRational& t,
                                               size_t s) {
    if (s == 0 || s > ab.rows() || s > ab.cols()) return kInfiniteValuation;
    std::vector<std::vector<size_t>> rows, cols;
    subsets_of_size(ab.rows() - 1, s - 1, rows);
    subsets_of_size(ab.cols(), s, cols);
    long best = kInfiniteValuation;
    for (auto& r : rows)
        for (auto& c : cols) {
            std::vector<size_t> rr = r;
            rr.push_back(ab.rows() - 1);
            Poly d = minor_det(ab, rr, c);
            if (d.is_zero()) continue;
            best = std::min(best, static_cast<long>(d.multiplicity_at(t)));
        }
    return best;
}

/// Valuation profile of a matrix pp-formula at one point t, from which the
/// definable subgroup exponent on E_t(k) is a closed form in k.
///
/// The row lattice of [A; w^k I] over the local ring at t has covolume
/// valuation V1(k) = min_p ((l-p)k + minA[p]); appending x*b changes it iff
/// x's valuation beats V1(k) - V2(k), with V2 from the b-row minors.
struct MatrixValuationProfile {
    size_t l = 0, ka = 0;
    std::vector<long> min_a;  // index p = rows taken from A
    std::vector<long> min_ab; // index s >= 1, minors using the b row

    long v1(long k) const {
        long best = kInfiniteValuation;
        for (size_t p = 0; p <= std::min(l, ka); ++p) {
            if (min_a[p] >= kInfiniteValuation) continue;
            best = std::min(best, static_cast<long>(l - p) * k + min_a[p]);
        }
        return best;
    }
    long v2(long k) const {
        long best = kInfiniteValuation;
        for (size_t s = 1; s <= l; ++s) {
            if (min_ab[s] >= kInfiniteValuation) continue;
            best = std::min(best, static_cast<long>(l - s) * k + min_ab[s]);
        }
        return best;
    }
    unsigned exponent(unsigned k) const {
        long e = v1(k) - v2(k);
        if (v2(k) >= kInfiniteValuation) e = 0; // b vanishes: x*b = 0 solvable by y = 0
        if (e < 0) e = 0;
        if (e > static_cast<long>(k)) e = k;
        return static_cast<unsigned>(e);
    }
};

inline MatrixValuationProfile matrix_profile(const PpFormula& f, const GaussRational& t) {
    PolyMatrix a(f.rows(), f.cols());
    for (size_t i = 0; i < f.rows(); ++i)
        for (size_t j = 0; j < f.cols(); ++j) a.at(i, j) = f.entry(i, j);
    PolyMatrix ab = a.with_row(f.rhs());
    MatrixValuationProfile prof;
    prof.l = f.cols();
    prof.ka = f.rows();
    prof.min_a.resize(std::min(prof.l, prof.ka) + 1);
    for (size_t p = 0; p <= std::min(prof.l, prof.ka); ++p)
        prof.min_a[p] = min_minor_valuation(a, t, p);
    prof.min_ab.resize(prof.l + 1, kInfiniteValuation);
    for (size_t s = 1; s <= prof.l; ++s)
        prof.min_ab[s] = min_minor_valuation_using_last_row(ab, t, s);
    return prof;
}

/// Direct evaluation of a matrix formula: lattice membership over the local
/// ring for finite length points, a rank comparison for Q.
inline SubgroupDesc eval_matrix_oracle(const PpFormula& f, const ModulePoint& n) {
    if (n.kind == ModulePoint::Kind::QField) {
        PolyMatrix a(f.rows(), f.cols());
        for (size_t i = 0; i < f.rows(); ++i)
            for (size_t j = 0; j < f.cols(); ++j) a.at(i, j) = f.entry(i, j);
        bool all_zero_rhs = true;
        for (auto& p : f.rhs())
            if (!p.is_zero()) all_zero_rhs = false;
        if (all_zero_rhs) return SubgroupDesc::full();
        return a.rank() == a.with_row(f.rhs()).rank() ? SubgroupDesc::full()
                                                      : SubgroupDesc::zero();
    }
    return SubgroupDesc::exp(matrix_profile(f, n.t).exponent(n.k));
}

/// Evaluation of any formula with matrix subformulas routed through the
/// lattice-membership oracle instead of normalization.
inline SubgroupDesc eval_oracle(const PpFormula& f, const ModulePoint& n) {
    switch (f.kind()) {
    case PpFormula::Kind::MatrixForm: return eval_matrix_oracle(f, n);
    case PpFormula::Kind::Divides:
    case PpFormula::Kind::Ann: return eval(f, n);
    case PpFormula::Kind::Conj: {
        SubgroupDesc a = eval_oracle(f.left(), n), b = eval_oracle(f.right(), n);
        if (a.kind == SubgroupDesc::Kind::Exponent)
            return SubgroupDesc::exp(std::max(a.exponent, b.exponent));
        return (a.kind == SubgroupDesc::Kind::Full && b.kind == SubgroupDesc::Kind::Full)
                   ? SubgroupDesc::full()
                   : SubgroupDesc::zero();
    }
    case PpFormula::Kind::Sum: {
        SubgroupDesc a = eval_oracle(f.left(), n), b = eval_oracle(f.right(), n);
        if (a.kind == SubgroupDesc::Kind::Exponent)
            return SubgroupDesc::exp(std::min(a.exponent, b.exponent));
        return (a.kind == SubgroupDesc::Kind::Full || b.kind == SubgroupDesc::Kind::Full)
                   ? SubgroupDesc::full()
                   : SubgroupDesc::zero();
    }
    }
    return SubgroupDesc::full();
}

// ---- fixed-tier shift rules, applied literally ----------------------------

/// One direct shift of the threshold pair (k, l) by a = (z-t)^m; k = 0 or
/// l = 0 stand for the zero cut. Returns nothing when a lies in I.
inline std::optional<std::pair<unsigned, unsigned>> direct_shift(unsigned k, unsigned l,
                                                                 unsigned m) {
    if (k > 0 && m >= k) return std::nullopt; // a must stay outside I
    unsigned k2 = k > 0 ? k - m : 0;
    unsigned l2 = l > 0 ? l + m : 0;
    return std::make_pair(k2, l2);
}

/// Reflexive-symmetric-transitive closure of single shifts with m <= max_m,
/// restricted to thresholds <= cap.
inline std::set<std::pair<unsigned, unsigned>> shift_orbit(unsigned k, unsigned l,
                                                           unsigned max_m, unsigned cap) {
    std::set<std::pair<unsigned, unsigned>> seen{{k, l}};
    std::vector<std::pair<unsigned, unsigned>> work{{k, l}};
    while (!work.empty()) {
        auto [ck, cl] = work.back();
        work.pop_back();
        for (unsigned m = 0; m <= max_m; ++m) {
            // Direct shifts out of (ck, cl) and inverse shifts into it.
            if (auto d = direct_shift(ck, cl, m)) {
                if (d->first <= cap && d->second <= cap && seen.insert(*d).second)
                    work.push_back(*d);
            }
            // (pk, pl) shifts directly to (ck, cl) iff pk = ck + m (pk nonzero
            // pattern preserved) and pl = cl - m.
            unsigned pk = ck > 0 ? ck + m : 0;
            if (cl > 0 && cl > m) {
                unsigned pl = cl - m;
                if (pk <= cap && pl <= cap && seen.insert({pk, pl}).second)
                    work.push_back({pk, pl});
            } else if (cl == 0) {
                if (pk <= cap && seen.insert({pk, 0u}).second) work.push_back({pk, 0u});
            }
        }
    }
    return seen;
}

// ---- sharp operator, brute forced on monomial ideals ----------------------

/// Least multiplicity j such that some m < k has m + j >= k; the sharp of
/// (z-t)^k E contains exactly the elements of multiplicity >= this.
inline unsigned sharp_threshold_brute(unsigned k, unsigned probe = 16) {
    for (unsigned j = 0; j <= probe; ++j)
        for (unsigned m = 0; m < k; ++m)
            if (m + j >= k) return j;
    return probe + 1;
}

} // namespace zgoracle
