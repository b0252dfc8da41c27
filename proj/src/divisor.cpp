#include "zg/divisor.hpp"

#include <ostream>

#include "zg/errors.hpp"

namespace zg {

FiniteDivisor::FiniteDivisor(Support s) : support_(std::move(s)) {
    for (auto it = support_.begin(); it != support_.end();) {
        if (it->second == 0)
            it = support_.erase(it);
        else
            ++it;
    }
}

FiniteDivisor FiniteDivisor::single(const GaussRational& t, unsigned long m) {
    FiniteDivisor d;
    if (m > 0) d.support_.emplace(t, m);
    return d;
}

unsigned long FiniteDivisor::multiplicity(const GaussRational& t) const {
    auto it = support_.find(t);
    return it == support_.end() ? 0 : it->second;
}

unsigned long FiniteDivisor::total_multiplicity() const {
    unsigned long total = 0;
    for (auto& [t, m] : support_) total += m;
    return total;
}

std::string FiniteDivisor::str() const {
    std::string out = "{";
    bool first = true;
    for (auto& [t, m] : support_) {
        if (!first) out += ", ";
        out += t.str() + ":" + std::to_string(m);
        first = false;
    }
    return out + "}";
}

FiniteDivisor div_mul(const FiniteDivisor& f, const FiniteDivisor& g) {
    FiniteDivisor::Support s = f.support();
    for (auto& [t, m] : g.support()) s[t] += m;
    return FiniteDivisor(std::move(s));
}

FiniteDivisor div_gcd(const FiniteDivisor& f, const FiniteDivisor& g) {
    FiniteDivisor::Support s;
    for (auto& [t, m] : f.support()) {
        unsigned long n = g.multiplicity(t);
        if (n > 0) s.emplace(t, std::min(m, n));
    }
    return FiniteDivisor(std::move(s));
}

FiniteDivisor div_lcm(const FiniteDivisor& f, const FiniteDivisor& g) {
    FiniteDivisor::Support s = f.support();
    for (auto& [t, m] : g.support()) {
        auto [it, inserted] = s.emplace(t, m);
        if (!inserted) it->second = std::max(it->second, m);
    }
    return FiniteDivisor(std::move(s));
}

bool divides(const FiniteDivisor& f, const FiniteDivisor& g) {
    for (auto& [t, m] : f.support())
        if (g.multiplicity(t) < m) return false;
    return true;
}

FiniteDivisor div_trunc_sub(const FiniteDivisor& f, const FiniteDivisor& g) {
    FiniteDivisor::Support s;
    for (auto& [t, m] : f.support()) {
        unsigned long n = g.multiplicity(t);
        if (m > n) s.emplace(t, m - n);
    }
    return FiniteDivisor(std::move(s));
}

std::pair<FiniteDivisor, FiniteDivisor> adequate_split(const FiniteDivisor& f,
                                                       const FiniteDivisor& g) {
    if (f.is_unit_class()) throw DomainError("adequate split of the unit class");
    FiniteDivisor::Support h, u;
    for (auto& [t, m] : f.support()) {
        if (g.multiplicity(t) > 0)
            u.emplace(t, m);
        else
            h.emplace(t, m);
    }
    return {FiniteDivisor(std::move(h)), FiniteDivisor(std::move(u))};
}

std::optional<std::pair<FiniteDivisor, FiniteDivisor>> split_coprime(const FiniteDivisor& f) {
    if (f.support_size() < 2) return std::nullopt;
    auto it = f.support().begin();
    FiniteDivisor first = FiniteDivisor::single(it->first, it->second);
    FiniteDivisor::Support rest(std::next(it), f.support().end());
    return std::make_pair(std::move(first), FiniteDivisor(std::move(rest)));
}

std::string SplitScalar::str() const {
    if (divisor.is_unit_class()) return unit.str();
    std::string u = unit.is_one() ? "" : unit.str() + "*";
    return u + divisor.str();
}

Poly to_poly(const SplitScalar& s) {
    if (s.unit.is_zero()) throw DomainError("split scalar with zero unit");
    Poly p = Poly::constant(s.unit);
    for (auto& [t, m] : s.divisor.support()) p = p * Poly::linear_root(t).pow(m);
    return p;
}

SplitScalar from_poly(const Poly& f, const std::vector<GaussRational>& roots) {
    if (f.is_zero()) throw DomainError("zero polynomial has no divisor");
    FiniteDivisor::Support support;
    Poly rest = f;
    for (const auto& t : roots) {
        if (support.count(t)) continue;
        unsigned m = rest.multiplicity_at(t);
        if (m == 0) continue;
        support.emplace(t, m);
        rest = Poly::divmod(rest, Poly::linear_root(t).pow(m)).first;
    }
    if (!rest.is_constant())
        throw DomainError("unsplit factor remains: " + rest.str());
    return SplitScalar{rest.leading(), FiniteDivisor(std::move(support))};
}

std::ostream& operator<<(std::ostream& os, const FiniteDivisor& d) { return os << d.str(); }

} // namespace zg
