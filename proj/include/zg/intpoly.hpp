#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zg/bigint.hpp"

namespace zg {

/// Polynomial in one variable n with integer coefficients, lowest degree first.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c) { // NOLINT: implicit by design
        if (c != 0) c_.push_back(BigInt(c));
    }
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly var(); // n
    static IntPoly monomial(BigInt c, size_t deg);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const BigInt& leading() const;
    BigInt coeff(size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const BigInt& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    BigInt eval(const BigInt& n) const;
    /// p(a*n + b)
    IntPoly compose_affine(long a, long b) const;

    /// Smallest N >= 0 with p(n) >= 0 for all integers n >= N.
    /// Throws when the polynomial is eventually negative.
    unsigned long nonneg_from() const;
    /// True when p(n) >= 0 for all n >= from.
    bool nonneg_on_tail(unsigned long from) const;
    /// Smallest N >= lo with p(n) > 0 for all n >= N; throws if not eventually positive.
    unsigned long positive_from(unsigned long lo = 0) const;

    std::string str(const std::string& var = "n") const;

private:
    void normalize();
    /// All integer roots lie strictly below this bound (Cauchy-style).
    unsigned long variation_bound() const;
    std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

} // namespace zg
