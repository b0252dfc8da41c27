#include "zg/poly.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::var() { return monomial(GaussRational(1), 1); }

Poly Poly::constant(GaussRational c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(GaussRational c, size_t deg) {
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, GaussRational(0));
        p.c_[deg] = std::move(c);
    }
    return p;
}

Poly Poly::linear_root(const GaussRational& t) {
    Poly p;
    p.c_ = {-t, GaussRational(1)};
    return p;
}

const GaussRational& Poly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    r.normalize();
    return r;
}

Poly Poly::operator*(const GaussRational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Poly Poly::shifted(size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + k, GaussRational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

GaussRational Poly::eval(const GaussRational& t) const {
    GaussRational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw DomainError("polynomial division by zero");
    Poly q, r = f;
    const int dg = g.degree();
    GaussRational lg_inv = g.leading().inv();
    if (r.degree() >= dg) q.c_.assign(r.degree() - dg + 1, GaussRational(0));
    while (!r.is_zero() && r.degree() >= dg) {
        const int k = r.degree() - dg;
        GaussRational coef = r.c_.back() * lg_inv;
        q.c_[k] = coef;
        // r -= coef * g * z^k, done in place
        for (int i = 0; i <= dg; ++i) {
            if (g.c_[i].is_zero()) continue;
            r.c_[i + k] = r.c_[i + k] - coef * g.c_[i];
        }
        r.normalize();
    }
    q.normalize();
    return {std::move(q), std::move(r)};
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly r0 = f, r1 = g;
    Poly s0 = one(), s1 = zero();
    Poly t0 = zero(), t1 = one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    GaussRational lc_inv = r0.leading().inv();
    return {r0 * lc_inv, s0 * lc_inv, t0 * lc_inv};
}

Poly Poly::gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly Poly::lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return zero();
    Poly d = gcd(f, g);
    return (f * divmod(g, d).first).monic();
}

bool Poly::divides(const Poly& f, const Poly& g) {
    if (f.is_zero()) return g.is_zero();
    return divmod(g, f).second.is_zero();
}

Poly Poly::monic() const {
    if (is_zero()) throw DomainError("monic form of zero polynomial");
    return *this * leading().inv();
}

unsigned Poly::multiplicity_at(const GaussRational& t) const {
    if (is_zero()) throw DomainError("multiplicity in zero polynomial");
    // Repeated synthetic division by (z - t).
    unsigned m = 0;
    std::vector<GaussRational> cur = c_;
    while (true) {
        // Horner pass: acc ends as the value at t, quo holds the deflation.
        std::vector<GaussRational> quo(cur.size() > 1 ? cur.size() - 1 : 0, GaussRational(0));
        GaussRational acc(0);
        for (size_t i = cur.size(); i-- > 0;) {
            GaussRational next = cur[i] + acc * t;
            if (i > 0) quo[i - 1] = next;
            acc = next;
        }
        if (!acc.is_zero()) return m;
        ++m;
        cur = std::move(quo);
        if (cur.empty()) return m;
    }
}

std::pair<Poly, Poly> Poly::saturate_against(const Poly& b) const {
    if (is_zero()) throw DomainError("saturation of zero polynomial");
    if (b.is_zero()) return {one() * leading(), monic()};
    Poly e = *this;
    Poly g = gcd(e, b);
    while (!g.is_unit()) {
        e = divmod(e, g).first;
        if (e.is_constant()) break;
        g = gcd(e, b);
    }
    Poly s = divmod(*this, e).first;
    return {e, s};
}

namespace {

// One printed term; sign handled by the caller unless force_paren.
struct TermPieces {
    bool negative = false;
    std::string text;
};

TermPieces format_term(const GaussRational& c, int k) {
    TermPieces out;
    std::string coef;
    if (c.is_real()) {
        out.negative = c.re.sign() < 0;
        Rational mag = c.re.abs();
        if (!(mag.is_one() && k > 0)) coef = mag.str();
    } else if (c.re.is_zero()) {
        out.negative = c.im.sign() < 0;
        Rational mag = c.im.abs();
        coef = mag.is_one() ? "i" : mag.str() + "i";
    } else {
        coef = "(" + c.str() + ")";
    }
    if (k == 0) {
        out.text = coef.empty() ? "1" : coef;
        return out;
    }
    std::string zpow = k == 1 ? "z" : "z^" + std::to_string(k);
    out.text = coef.empty() ? zpow : coef + "*" + zpow;
    return out;
}

} // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        TermPieces t = format_term(c_[i], static_cast<int>(i));
        if (out.empty()) {
            out = (t.negative ? "-" : "") + t.text;
        } else {
            out += (t.negative ? "-" : "+") + t.text;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace zg
