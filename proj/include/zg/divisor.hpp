#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zg/poly.hpp"

namespace zg {

/// Principal-ideal class of an entire function with finitely many zeros:
/// the zero set with multiplicities. Empty support is the unit class.
class FiniteDivisor {
public:
    using Support = std::map<GaussRational, unsigned long>;

    FiniteDivisor() = default;
    explicit FiniteDivisor(Support s);

    static FiniteDivisor unit_class() { return FiniteDivisor(); }
    static FiniteDivisor single(const GaussRational& t, unsigned long m);

    bool is_unit_class() const { return support_.empty(); }
    size_t support_size() const { return support_.size(); }
    unsigned long multiplicity(const GaussRational& t) const;
    unsigned long total_multiplicity() const;
    const Support& support() const { return support_; }

    bool operator==(const FiniteDivisor& o) const { return support_ == o.support_; }

    std::string str() const; // {t:m, ...} literal, points in canonical order

private:
    Support support_;
};

/// Multiplicities add: divisor of a product.
FiniteDivisor div_mul(const FiniteDivisor& f, const FiniteDivisor& g);
/// Pointwise minimum: divisor of a greatest common divisor.
FiniteDivisor div_gcd(const FiniteDivisor& f, const FiniteDivisor& g);
/// Pointwise maximum: divisor of a least common multiple.
FiniteDivisor div_lcm(const FiniteDivisor& f, const FiniteDivisor& g);
/// f | g at the ideal level: support containment with pointwise <=.
bool divides(const FiniteDivisor& f, const FiniteDivisor& g);
/// Pointwise max(f - g, 0), the ideal-quotient multiplicity.
FiniteDivisor div_trunc_sub(const FiniteDivisor& f, const FiniteDivisor& g);

/// f = h * u with gcd(h, g) a unit class and support(u) inside support(g);
/// h carries the multiplicities of f away from the zeros of g.
/// Requires f nonempty.
std::pair<FiniteDivisor, FiniteDivisor> adequate_split(const FiniteDivisor& f,
                                                       const FiniteDivisor& g);

/// Coprime factorization into two nonunits; empty when the support has
/// fewer than two points.
std::optional<std::pair<FiniteDivisor, FiniteDivisor>> split_coprime(const FiniteDivisor& f);

/// Scalar of the exact tier in split form: unit * prod (z - t)^m.
struct SplitScalar {
    GaussRational unit{1};
    FiniteDivisor divisor;

    bool operator==(const SplitScalar& o) const { return unit == o.unit && divisor == o.divisor; }
    std::string str() const;
};

/// Expand to the polynomial the split scalar denotes.
Poly to_poly(const SplitScalar& s);

/// Recover split form; the supplied roots (counted with multiplicity_at)
/// must exhaust the degree, otherwise an unsplit factor remains and this
/// throws.
SplitScalar from_poly(const Poly& f, const std::vector<GaussRational>& roots);

std::ostream& operator<<(std::ostream& os, const FiniteDivisor& d);

} // namespace zg
