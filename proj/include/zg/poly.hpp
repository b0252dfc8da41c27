#pragma once

#include <iosfwd>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zg/rational.hpp"

namespace zg {

/// Univariate polynomial over Q(i), coefficients lowest degree first,
/// no trailing zero coefficient (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(GaussRational(1)); }
    static Poly var(); // z
    static Poly constant(GaussRational c);
    static Poly monomial(GaussRational c, size_t deg);
    /// z - t
    static Poly linear_root(const GaussRational& t);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Nonzero constant, i.e. a unit of Q(i)[z].
    bool is_unit() const { return c_.size() == 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const GaussRational& leading() const;
    GaussRational coeff(size_t i) const { return i < c_.size() ? c_[i] : GaussRational(0); }
    const std::vector<GaussRational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const GaussRational& s) const;
    Poly pow(unsigned long e) const;
    Poly shifted(size_t k) const; // multiply by z^k

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    GaussRational eval(const GaussRational& t) const;

    /// f = q*g + r with deg r < deg g; throws on zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
    /// Monic gcd together with the Bezout cofactors: f*u + g*v = gcd.
    /// Throws when both inputs are zero.
    static std::tuple<Poly, Poly, Poly> xgcd(const Poly& f, const Poly& g);
    static Poly gcd(const Poly& f, const Poly& g); // monic; gcd(0,0) throws
    static Poly lcm(const Poly& f, const Poly& g); // monic; lcm(x,0) = 0
    static bool divides(const Poly& f, const Poly& g); // f | g

    Poly monic() const; // throws on zero

    /// Largest m with (z-t)^m dividing this; throws on the zero polynomial.
    unsigned multiplicity_at(const GaussRational& t) const;

    /// Removes from this all factors sharing roots with b: returns (e, s) with
    /// this = e*s, gcd(e, b) = 1, and every root of s a root of b.
    std::pair<Poly, Poly> saturate_against(const Poly& b) const;

    /// Canonical display, highest degree first, parseable by the DSL.
    std::string str() const;

private:
    void normalize();
    std::vector<GaussRational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace zg
