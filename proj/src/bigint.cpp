#include "zg/bigint.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
        mpz_clear(v_);
        mpz_init(v_);
        throw DomainError("not a decimal integer: '" + decimal + "'");
    }
}

BigInt BigInt::operator-() const {
    BigInt r;
    mpz_neg(r.v_, v_);
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    mpz_add(r.v_, v_, o.v_);
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
    BigInt r;
    mpz_sub(r.v_, v_, o.v_);
    return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    mpz_mul(r.v_, v_, o.v_);
    return r;
}

BigInt BigInt::div_trunc(const BigInt& o) const {
    if (o.is_zero()) throw DomainError("integer division by zero");
    BigInt r;
    mpz_tdiv_q(r.v_, v_, o.v_);
    return r;
}

BigInt BigInt::div_exact(const BigInt& o) const {
    if (o.is_zero()) throw DomainError("integer division by zero");
    BigInt r;
    mpz_divexact(r.v_, v_, o.v_);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.v_, a.v_, b.v_);
    return r;
}

BigInt BigInt::abs() const {
    BigInt r;
    mpz_abs(r.v_, v_);
    return r;
}

BigInt BigInt::pow(unsigned long e) const {
    BigInt r;
    mpz_pow_ui(r.v_, v_, e);
    return r;
}

long BigInt::to_long() const {
    if (!fits_long()) throw DomainError("integer out of machine range: " + str());
    return mpz_get_si(v_);
}

std::string BigInt::str() const {
    char* s = mpz_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

} // namespace zg
