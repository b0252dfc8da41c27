#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zg/cuts.hpp"
#include "zg/divisor.hpp"
#include "zg/epseq.hpp"
#include "zg/semantics.hpp"

namespace zg {

/// Scalar slot of a basic open pair: a raw polynomial, a split scalar with
/// known roots, or a symbolic tail divisor.
struct PairScalar {
    enum class Kind { ExactPoly, ExactSplit, Tail };
    Kind kind = Kind::ExactPoly;
    Poly poly;
    SplitScalar split;
    TailDivisor tail;

    static PairScalar exact(Poly p);
    static PairScalar exact_split(SplitScalar s);
    static PairScalar symbolic(TailDivisor t);

    bool is_exact() const { return kind != Kind::Tail; }
    bool is_zero_scalar() const { return kind == Kind::ExactPoly && poly.is_zero(); }
    /// Polynomial the scalar denotes (exact tiers only).
    Poly as_poly() const;
    /// Roots with multiplicities when known (split form), nothing otherwise.
    std::optional<FiniteDivisor> known_roots() const;
    std::string str() const;
};

/// Basic open set (a|x & xb=0) over (c|x + xd=0); all four scalars in the
/// same tier.
struct BasicOpenPair {
    PairScalar a, b, c, d;

    bool exact_tier() const;
    bool tail_tier() const;
    /// Throws when the scalars mix tiers.
    void require_consistent() const;

    PpFormula phi() const; // exact tier
    PpFormula psi() const; // exact tier
    std::string str() const;
};

/// The pair that isolates E_t(n): (1 | x & x(z-t)^n = 0) over
/// ((z-t) | x + x(z-t)^(n-1) = 0).
BasicOpenPair isolation_pair(const GaussRational& t, unsigned n);

/// Membership of a finite-length point or Q in the basic open set.
bool contains_point(const BasicOpenPair& pair, const ModulePoint& n);

struct TripleMembership {
    bool contained = false;
    /// Feasible signed shift (free tier) or its fixed-tier amount.
    IntPoly shift;
    long fixed_shift = 0;
    std::vector<std::string> transcript;
};

/// Membership of the point PE(U, I, J): some shift (I', J') of the cuts has
/// b in I', a notin J', c in J', d notin I'.
TripleMembership contains_triple(const BasicOpenPair& pair, const AdmissibleTriple& tr);

struct InhabitOptions {
    unsigned max_k = 0; // 0: derive the bound from the scalars
    unsigned seed = 0;  // probe-order rotation
};

struct WitnessReport {
    bool empty = false;
    // Witness (when not empty):
    ModulePoint point;
    unsigned element = 0; // j: the element (z-t)^j of E_t(k)
    unsigned phi_exponent = 0, psi_exponent = 0;
    std::optional<unsigned long> tail_index; // materialized support index
    // Certificate (when empty): the family on which phi <= psi was checked.
    std::vector<ModulePoint> certificate_family;
    std::vector<std::string> transcript;

    /// Re-derives the claim from the transcript data; true when consistent.
    bool replay(const BasicOpenPair& pair) const;
};

/// Finite-length witness inside the open set, searched over the scalars'
/// root supports plus one fresh point; Empty only with a triviality
/// certificate over the probed family.
WitnessReport inhabit(const BasicOpenPair& pair, const InhabitOptions& opts = {});

struct DerivativePair {
    BasicOpenPair simplified;
    bool empty_in_derivative = false;
    std::string note;
};

/// Localization at the nonzero polynomials: every nonzero exact scalar
/// becomes a unit. Tail-tier pairs are unchanged.
DerivativePair cb_derivative_pair(const BasicOpenPair& pair);

struct SuperdecomposabilityReport {
    bool candidate = false;
    std::string reason;
    std::optional<std::pair<FiniteDivisor, FiniteDivisor>> finite_split;
    std::optional<TailSplit> tail_split;
    std::optional<FiniteDivisor> blocking_divisor; // one-point nonunit that cannot split
};

SuperdecomposabilityReport is_superdecomposable_candidate(
    const std::variant<FiniteDivisor, TailDivisor>& scalar);

struct DenseChainWitness {
    EPSeq midpoint;
    unsigned long left_strict_from = 0;  // mu < xi pointwise from here on
    unsigned long right_strict_from = 0; // xi < nu pointwise from here on
    std::vector<std::string> transcript;
};

/// Witness that the derivative chain has an element strictly between the
/// classes of mu and nu; certifies a 2x2 incomparable sublattice in the
/// derivative pp-lattice.
DenseChainWitness dense_chain_check(const EPSeq& mu, const EPSeq& nu);

} // namespace zg
