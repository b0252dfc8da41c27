#pragma once

#include <optional>
#include <string>

#include "zg/epseq.hpp"
#include "zg/rational.hpp"

namespace zg {

/// Weakly prime ideal of E from the representable catalog, identified with
/// its cut on the multiplicity chain.
///
///   Zero            - the zero ideal (both tiers)
///   FixedThreshold  - (z-t)^k E on a principal ultrafilter, k >= 1
///   PrincipalAbove  - free tier, multiplicities eventually >= gamma
///   DegreeAtLeast   - free tier, multiplicity tails of degree >= d
///                     (d = 1 is M_infinity, the functions of unbounded
///                     multiplicity growth)
struct Cut {
    enum class Kind { Zero, FixedThreshold, PrincipalAbove, DegreeAtLeast };
    Kind kind = Kind::Zero;
    unsigned k = 0;  // FixedThreshold
    EPSeq gamma;     // PrincipalAbove, cofinitely >= 1
    unsigned d = 0;  // DegreeAtLeast

    static Cut zero() { return {}; }
    static Cut fixed_threshold(unsigned k);
    static Cut principal_above(EPSeq gamma);
    static Cut degree_at_least(unsigned d);

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_free_tier() const {
        return kind == Kind::PrincipalAbove || kind == Kind::DegreeAtLeast;
    }
    bool operator==(const Cut& o) const;
    std::string str() const;
};

struct UltrafilterSpec {
    enum class Kind { Fixed, FreeTail, Empty };
    Kind kind = Kind::Empty;
    GaussRational t; // Fixed only

    static UltrafilterSpec fixed(GaussRational t) { return {Kind::Fixed, std::move(t)}; }
    static UltrafilterSpec free_tail() { return {Kind::FreeTail, {}}; }
    static UltrafilterSpec empty() { return {Kind::Empty, {}}; }

    bool operator==(const UltrafilterSpec& o) const {
        return kind == o.kind && (kind != Kind::Fixed || t == o.t);
    }
    std::string str() const;
};

/// The (U, I, J) datum of an indecomposable pp-type: I the annihilator cut,
/// J the non-divisibility cut.
struct AdmissibleTriple {
    UltrafilterSpec u;
    Cut i, j;

    bool operator==(const AdmissibleTriple& o) const { return u == o.u && i == o.i && j == o.j; }
    std::string str() const;
};

/// Which admissibility case a triple matches, or why it is invalid.
struct TripleValidation {
    bool ok = false;
    int matched_case = 0; // 1..4 when ok
    std::string detail;
};

TripleValidation validate_triple(const AdmissibleTriple& tr);
/// Throws DomainError when invalid.
void require_valid(const AdmissibleTriple& tr);

/// Complement closed under lcm; holds for every catalog cut, the function
/// records the reason per kind.
bool is_weakly_prime(const Cut& c, std::string* reason = nullptr);

/// b is in c(I)-sharp iff some a outside the ideal has a*b inside.
Cut sharp(const Cut& c);
bool is_prime_cut(const Cut& c);

/// Ideal inclusion within one tier.
bool cut_subseteq(const Cut& a, const Cut& b);

/// The localizing prime ideal of PE(U, I, J): the larger of the sharps.
Cut localizing_ideal(const AdmissibleTriple& tr);

/// Witness that two triples are identified by multiplication by a ring
/// element of the given multiplicity.
struct ShiftWitness {
    enum class Direction { Identity, Direct, Inverse };
    Direction direction = Direction::Identity;
    unsigned fixed_amount = 0; // exponent of (z-t)^m, fixed tier
    IntPoly free_amount;       // multiplicity polynomial, free tier
    std::string str() const;
};

std::optional<ShiftWitness> shift_equivalent(const AdmissibleTriple& a,
                                             const AdmissibleTriple& b);

/// Canonical representative of the shift class of a valid triple.
AdmissibleTriple canonical_triple(const AdmissibleTriple& tr);

struct PointClass {
    enum class Kind {
        IsolatedFiniteLength, // E_t(n)
        FreeFiniteEndolength, // E_M(k), free maximal M
        Generic,              // Q(E/P) for a prime cut P
        QPoint,               // the field of meromorphic functions
        Other                 // remaining classes, named by canonical triple
    };
    Kind kind = Kind::Other;
    GaussRational t; // IsolatedFiniteLength
    unsigned n = 0;  // IsolatedFiniteLength / FreeFiniteEndolength
    Cut prime;       // Generic
    std::string label() const;
};

struct Classification {
    PointClass cls;
    bool isolated = false;
    bool closed = false;
    bool survives_cb = false;
    /// Only meaningful when survives_cb; closed points of the derivative
    /// space are exactly the generics.
    bool closed_in_derivative = false;
    AdmissibleTriple canonical;
    std::string note;
};

Classification classify(const AdmissibleTriple& tr);

/// pp-type of the element (z-t)^j * 1 in E_t(n); requires j < n.
AdmissibleTriple pp_type_of_element(const GaussRational& t, unsigned n, unsigned j);

} // namespace zg
