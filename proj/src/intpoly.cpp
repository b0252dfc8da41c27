#include "zg/intpoly.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

IntPoly IntPoly::var() { return monomial(BigInt(1), 1); }

IntPoly IntPoly::monomial(BigInt c, size_t deg) {
    IntPoly p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, BigInt(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.normalize();
    return r;
}

IntPoly IntPoly::scaled(const BigInt& s) const {
    if (s.is_zero()) return IntPoly();
    IntPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

BigInt IntPoly::eval(const BigInt& n) const {
    BigInt acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * n + c_[i];
    return acc;
}

IntPoly IntPoly::compose_affine(long a, long b) const {
    IntPoly arg;
    arg.c_ = {BigInt(b), BigInt(a)};
    arg.normalize();
    IntPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * arg + IntPoly(std::vector<BigInt>{c_[i]});
    }
    return acc;
}

unsigned long IntPoly::variation_bound() const {
    if (c_.size() <= 1) return 0;
    // 1 + max |a_i| / |lead|, rounded up: beyond it the leading term dominates.
    BigInt lead = c_.back().abs();
    BigInt maxc(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
        BigInt a = c_[i].abs();
        if (a > maxc) maxc = a;
    }
    BigInt bound = (maxc + lead - BigInt(1)).div_trunc(lead) + BigInt(1);
    if (!bound.fits_long() || bound.to_long() > 100000000L)
        throw DomainError("coefficient bound too large for sign analysis");
    return static_cast<unsigned long>(bound.to_long());
}

bool IntPoly::nonneg_on_tail(unsigned long from) const {
    if (is_zero()) return true;
    if (leading().sign() < 0) return false;
    unsigned long hi = variation_bound();
    for (unsigned long n = from; n <= hi; ++n)
        if (eval(BigInt(static_cast<long>(n))).sign() < 0) return false;
    return true;
}

unsigned long IntPoly::nonneg_from() const {
    if (is_zero()) return 0;
    if (leading().sign() < 0) throw DomainError("polynomial is eventually negative: " + str());
    unsigned long hi = variation_bound();
    unsigned long last_neg = 0;
    bool seen = false;
    for (unsigned long n = 0; n <= hi; ++n) {
        if (eval(BigInt(static_cast<long>(n))).sign() < 0) {
            last_neg = n;
            seen = true;
        }
    }
    return seen ? last_neg + 1 : 0;
}

unsigned long IntPoly::positive_from(unsigned long lo) const {
    if (is_zero() || leading().sign() < 0)
        throw DomainError("polynomial is not eventually positive: " + str());
    unsigned long hi = std::max(lo, variation_bound());
    unsigned long last_bad = 0;
    bool seen = false;
    for (unsigned long n = lo; n <= hi; ++n) {
        if (eval(BigInt(static_cast<long>(n))).sign() <= 0) {
            last_bad = n;
            seen = true;
        }
    }
    return seen ? last_bad + 1 : lo;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        bool neg = c_[i].sign() < 0;
        BigInt mag = c_[i].abs();
        std::string piece;
        if (i == 0) {
            piece = mag.str();
        } else {
            std::string vp = i == 1 ? var : var + "^" + std::to_string(i);
            piece = mag.is_one() ? vp : mag.str() + "*" + vp;
        }
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? "-" : "+") + piece;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

} // namespace zg
