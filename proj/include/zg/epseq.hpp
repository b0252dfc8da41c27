#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "zg/intpoly.hpp"

namespace zg {

enum class EpsOrder { Less, EqualCofinite, Greater };

/// Eventually-polynomial sequence of naturals: finitely many exceptional
/// values below a threshold, an integer-coefficient polynomial tail from the
/// threshold on. Stands in for an element of the ultraproduct N^D/U over any
/// nonprincipal ultrafilter containing the cofinite filter; every order
/// computation below depends only on the tail.
class EPSeq {
public:
    EPSeq() : threshold_(0) {}

    /// Threshold is computed as the least index from which the tail applies
    /// and is nonnegative; exception entries equal to the default are dropped.
    static EPSeq make(IntPoly tail, std::map<unsigned long, unsigned long> exceptions = {});
    static EPSeq constant(unsigned long v) { return make(IntPoly(static_cast<long>(v))); }

    const IntPoly& tail() const { return tail_; }
    unsigned long threshold() const { return threshold_; }
    const std::map<unsigned long, unsigned long>& exceptions() const { return exceptions_; }

    BigInt value_at(unsigned long n) const;

    /// Identically zero from some point on (empty cofinite support).
    bool cofinitely_zero() const { return tail_.is_zero(); }
    /// >= 1 from some point on.
    bool cofinitely_positive() const { return !tail_.is_zero(); }

    EPSeq operator+(const EPSeq& o) const;
    /// Pointwise max(a - b, 0); always representable.
    EPSeq trunc_sub(const EPSeq& o) const;
    EPSeq scaled(unsigned long k) const;

    bool operator==(const EPSeq& o) const {
        return tail_ == o.tail_ && threshold_ == o.threshold_ && exceptions_ == o.exceptions_;
    }

    std::string str() const; // tail(p; i:v, ...) literal

private:
    std::map<unsigned long, unsigned long> exceptions_;
    IntPoly tail_;
    unsigned long threshold_;
};

/// Comparison of eventual values; total because two integer polynomials are
/// eventually ordered.
EpsOrder eps_cmp(const EPSeq& a, const EPSeq& b);

/// Bounded difference, i.e. the tails differ by a constant.
bool fin_equiv(const EPSeq& a, const EPSeq& b);

/// Least N such that a(n) < b(n) for all n >= N; requires eps_cmp == Less.
unsigned long strict_order_from(const EPSeq& a, const EPSeq& b);

/// Strictly intermediate sequence, not finitely equivalent to either end.
/// Requires a < b and not fin_equiv(a, b); throws when the gap is a cover of
/// the representable chain (tail difference of degree 1 with unit slope).
EPSeq dense_between(const EPSeq& a, const EPSeq& b);

/// Symbolic divisor with countable support d_0, d_1, ...; multiplicity of d_n
/// is the sequence value at n. Denotes an entire function by Weierstrass.
struct TailDivisor {
    EPSeq multiplicity;

    bool infinite_support() const { return multiplicity.cofinitely_positive(); }
    bool operator==(const TailDivisor& o) const { return multiplicity == o.multiplicity; }
    std::string str() const { return multiplicity.str(); }
};

/// Result of splitting a tail divisor along the even/odd index partition;
/// each part is reindexed over its own copy of the support.
struct TailSplit {
    EPSeq even_part; // multiplicities at d_0, d_2, d_4, ...
    EPSeq odd_part;  // multiplicities at d_1, d_3, d_5, ...
};

/// Coprime factorization of a tail divisor with infinite support.
/// Throws when the support is finite (handled by the finite tier instead).
TailSplit split_coprime(const TailDivisor& f);

std::ostream& operator<<(std::ostream& os, const EPSeq& s);

} // namespace zg
