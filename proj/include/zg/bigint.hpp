#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace zg {

/// Arbitrary-precision integer with value semantics (GMP-backed).
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long v) { mpz_init_set_si(v_, v); } // NOLINT: implicit by design
    explicit BigInt(const std::string& decimal);

    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    // Truncated division; throws DomainError on zero divisor.
    BigInt div_trunc(const BigInt& o) const;
    // Exact division; quotient must have no remainder.
    BigInt div_exact(const BigInt& o) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);
    BigInt abs() const;
    BigInt pow(unsigned long e) const;

    bool operator==(const BigInt& o) const { return mpz_cmp(v_, o.v_) == 0; }
    std::strong_ordering operator<=>(const BigInt& o) const {
        int c = mpz_cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const; // throws DomainError if out of range
    std::string str() const;

    // Read-only access for GMP-level interop (rational.cpp).
    const mpz_t& raw() const { return v_; }
    mpz_t& raw_mut() { return v_; }

private:
    mpz_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& v);

} // namespace zg
