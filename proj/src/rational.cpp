#include "zg/rational.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw DomainError("rational with zero denominator");
    mpq_init(v_);
    mpq_set_num(v_, num.raw());
    mpq_set_den(v_, den.raw());
    mpq_canonicalize(v_);
}

Rational::Rational(const BigInt& num) {
    mpq_init(v_);
    mpq_set_z(v_, num.raw());
}

BigInt Rational::num() const {
    BigInt r;
    mpz_set(r.raw_mut(), mpq_numref(v_));
    return r;
}

BigInt Rational::den() const {
    BigInt r;
    mpz_set(r.raw_mut(), mpq_denref(v_));
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    Rational r;
    mpq_add(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator-(const Rational& o) const {
    Rational r;
    mpq_sub(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator*(const Rational& o) const {
    Rational r;
    mpq_mul(r.v_, v_, o.v_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DomainError("rational division by zero");
    Rational r;
    mpq_div(r.v_, v_, o.v_);
    return r;
}

Rational Rational::abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
}

Rational Rational::inv() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, v_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

GaussRational GaussRational::operator/(const GaussRational& o) const {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    Rational n = o.norm();
    GaussRational t = *this * o.conj();
    return {t.re / n, t.im / n};
}

GaussRational GaussRational::inv() const {
    if (is_zero()) throw DomainError("inverse of zero in Q(i)");
    Rational n = norm();
    return {re / n, -im / n};
}

std::string GaussRational::str() const {
    if (im.is_zero()) return re.str();
    std::string imag = im.abs().is_one() ? "i" : im.abs().str() + "i";
    if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
    return re.str() + (im.sign() < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& v) { return os << v.str(); }

} // namespace zg
