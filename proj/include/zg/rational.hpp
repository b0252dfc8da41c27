#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "zg/bigint.hpp"

namespace zg {

/// Exact rational number, always canonical: gcd(|num|, den) = 1, den >= 1.
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long v) { // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, v, 1);
    }
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& num);

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_ui(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }
    int sign() const { return mpq_sgn(v_); }

    BigInt num() const;
    BigInt den() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const; // throws on zero divisor
    Rational& operator+=(const Rational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    Rational abs() const;
    Rational inv() const; // throws on zero

    bool operator==(const Rational& o) const { return mpq_equal(v_, o.v_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Element of Q(i); equality and canonicity are componentwise.
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {} // NOLINT: implicit by design
    GaussRational(long r) : re(r) {}                // NOLINT: implicit by design
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRational operator-() const { return {-re, -im}; }
    GaussRational operator+(const GaussRational& o) const { return {re + o.re, im + o.im}; }
    GaussRational operator-(const GaussRational& o) const { return {re - o.re, im - o.im}; }
    GaussRational operator*(const GaussRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRational operator/(const GaussRational& o) const; // throws on zero
    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    GaussRational inv() const;

    bool operator==(const GaussRational& o) const { return re == o.re && im == o.im; }

    /// Total order for canonical containers (lexicographic on (re, im)).
    std::strong_ordering operator<=>(const GaussRational& o) const {
        auto c = re <=> o.re;
        return c != std::strong_ordering::equal ? c : im <=> o.im;
    }

    /// Wire format: "a", "bi", "a+bi", "a-bi"; rational parts as p/q.
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& v);

} // namespace zg
