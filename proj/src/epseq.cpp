#include "zg/epseq.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

namespace {

BigInt default_value(const IntPoly& tail, unsigned long n) {
    BigInt v = tail.eval(BigInt(static_cast<long>(n)));
    return v.sign() < 0 ? BigInt(0) : v;
}

} // namespace

EPSeq EPSeq::make(IntPoly tail, std::map<unsigned long, unsigned long> exceptions) {
    EPSeq s;
    s.tail_ = std::move(tail);
    for (auto& [idx, val] : exceptions) {
        if (default_value(s.tail_, idx) != BigInt(static_cast<long>(val)))
            s.exceptions_.emplace(idx, val);
    }
    unsigned long thr = s.tail_.nonneg_from();
    if (!s.exceptions_.empty()) thr = std::max(thr, s.exceptions_.rbegin()->first + 1);
    s.threshold_ = thr;
    return s;
}

BigInt EPSeq::value_at(unsigned long n) const {
    auto it = exceptions_.find(n);
    if (it != exceptions_.end()) return BigInt(static_cast<long>(it->second));
    return default_value(tail_, n);
}

EPSeq EPSeq::operator+(const EPSeq& o) const {
    IntPoly t = tail_ + o.tail_;
    unsigned long probe = std::max({threshold_, o.threshold_, t.nonneg_from()});
    std::map<unsigned long, unsigned long> exc;
    for (unsigned long n = 0; n < probe; ++n) {
        BigInt v = value_at(n) + o.value_at(n);
        exc.emplace(n, static_cast<unsigned long>(v.to_long()));
    }
    return make(std::move(t), std::move(exc));
}

EPSeq EPSeq::trunc_sub(const EPSeq& o) const {
    IntPoly diff = tail_ - o.tail_;
    IntPoly t;
    unsigned long settle;
    if (!diff.is_zero() && diff.leading().sign() > 0) {
        t = diff;
        settle = diff.nonneg_from();
    } else {
        // Eventually nonpositive difference truncates to the zero tail.
        t = IntPoly();
        settle = (-diff).nonneg_from();
    }
    unsigned long probe = std::max({threshold_, o.threshold_, settle});
    std::map<unsigned long, unsigned long> exc;
    for (unsigned long n = 0; n < probe; ++n) {
        BigInt v = value_at(n) - o.value_at(n);
        if (v.sign() < 0) v = BigInt(0);
        exc.emplace(n, static_cast<unsigned long>(v.to_long()));
    }
    return make(std::move(t), std::move(exc));
}

EPSeq EPSeq::scaled(unsigned long k) const {
    IntPoly t = tail_.scaled(BigInt(static_cast<long>(k)));
    std::map<unsigned long, unsigned long> exc;
    for (auto& [idx, val] : exceptions_) exc.emplace(idx, val * k);
    for (unsigned long n = 0; n < threshold_; ++n)
        if (!exc.count(n)) exc.emplace(n, static_cast<unsigned long>((value_at(n) * BigInt(static_cast<long>(k))).to_long()));
    return make(std::move(t), std::move(exc));
}

std::string EPSeq::str() const {
    std::string out = "tail(" + tail_.str();
    bool first = true;
    for (auto& [idx, val] : exceptions_) {
        out += first ? "; " : ", ";
        out += std::to_string(idx) + ":" + std::to_string(val);
        first = false;
    }
    return out + ")";
}

EpsOrder eps_cmp(const EPSeq& a, const EPSeq& b) {
    IntPoly diff = b.tail() - a.tail();
    if (diff.is_zero()) return EpsOrder::EqualCofinite;
    return diff.leading().sign() > 0 ? EpsOrder::Less : EpsOrder::Greater;
}

bool fin_equiv(const EPSeq& a, const EPSeq& b) {
    return (b.tail() - a.tail()).degree() <= 0;
}

unsigned long strict_order_from(const EPSeq& a, const EPSeq& b) {
    if (eps_cmp(a, b) != EpsOrder::Less)
        throw DomainError("sequences are not eventually strictly ordered");
    IntPoly diff = b.tail() - a.tail();
    unsigned long lo = std::max(a.threshold(), b.threshold());
    unsigned long from = diff.positive_from(lo);
    // Exceptional early indices may already satisfy the strict order; the
    // contract is the least index from which it holds everywhere onward.
    while (from > 0) {
        BigInt va = a.value_at(from - 1), vb = b.value_at(from - 1);
        if (!(va < vb)) break;
        --from;
    }
    return from;
}

EPSeq dense_between(const EPSeq& a, const EPSeq& b) {
    if (eps_cmp(a, b) != EpsOrder::Less)
        throw DomainError("dense_between requires strictly increasing endpoints");
    if (fin_equiv(a, b))
        throw DomainError("no element strictly between finitely equivalent endpoints");
    IntPoly delta = b.tail() - a.tail();
    const int d = delta.degree();
    IntPoly rho;
    if (d == 1) {
        if (delta.leading().is_one())
            throw DomainError(
                "gap is a cover of the eventually-polynomial chain; "
                "no integer-polynomial witness exists between " +
                a.tail().str() + " and " + b.tail().str());
        rho = IntPoly::var();
    } else {
        rho = IntPoly::monomial(BigInt(1), static_cast<size_t>(d - 1));
    }
    EPSeq xi = EPSeq::make(a.tail() + rho);
    return xi;
}

TailSplit split_coprime(const TailDivisor& f) {
    if (!f.infinite_support())
        throw DomainError("tail divisor has finite support; no even/odd split");
    const EPSeq& mu = f.multiplicity;
    IntPoly even_tail = mu.tail().compose_affine(2, 0);
    IntPoly odd_tail = mu.tail().compose_affine(2, 1);
    unsigned long half = mu.threshold() / 2 + 1;
    std::map<unsigned long, unsigned long> even_exc, odd_exc;
    for (unsigned long k = 0; k <= half; ++k) {
        even_exc.emplace(k, static_cast<unsigned long>(mu.value_at(2 * k).to_long()));
        odd_exc.emplace(k, static_cast<unsigned long>(mu.value_at(2 * k + 1).to_long()));
    }
    return {EPSeq::make(std::move(even_tail), std::move(even_exc)),
            EPSeq::make(std::move(odd_tail), std::move(odd_exc))};
}

std::ostream& operator<<(std::ostream& os, const EPSeq& s) { return os << s.str(); }

} // namespace zg
