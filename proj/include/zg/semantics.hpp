#pragma once

#include <string>
#include <vector>

#include "zg/formula.hpp"
#include "zg/smith.hpp"

namespace zg {

/// Evaluation point of the semantic family: a finite length module
/// E_t(k) = E/(z-t)^k E, or the quotient field Q.
struct ModulePoint {
    enum class Kind { FiniteLength, QField };
    Kind kind = Kind::QField;
    GaussRational t;
    unsigned k = 0; // >= 1 for finite length points

    static ModulePoint finite_length(GaussRational t, unsigned k);
    static ModulePoint q_field() { return ModulePoint{}; }

    std::string str() const;
};

/// Definable subgroup of a point. On E_t(k) the subgroups form the chain
/// (z-t)^e E_t(k), 0 <= e <= k, recorded by the exponent; on Q only the
/// full module and zero occur.
struct SubgroupDesc {
    enum class Kind { Exponent, Full, Zero };
    Kind kind = Kind::Full;
    unsigned exponent = 0;

    static SubgroupDesc exp(unsigned e) { return {Kind::Exponent, e}; }
    static SubgroupDesc full() { return {Kind::Full, 0}; }
    static SubgroupDesc zero() { return {Kind::Zero, 0}; }

    bool operator==(const SubgroupDesc& o) const = default;
    std::string str() const;
};

/// True when a is contained in b (same point).
bool subgroup_leq(const SubgroupDesc& a, const SubgroupDesc& b);

/// One basic pair of a normal form. In a sum form the pair (a, b) denotes
/// a|x and xb=0; in a conjunction form the pair (c, d) denotes c|x + xd=0.
struct NormalPair {
    Poly first, second;
    bool operator==(const NormalPair& o) const = default;
};

struct SumNormalForm {
    std::vector<NormalPair> pairs; // nonempty
    std::string str() const;
};

struct ConjNormalForm {
    std::vector<NormalPair> pairs; // nonempty
    std::string str() const;
};

/// Optional rewrite log for normalization (one line per step).
using Trace = std::vector<std::string>;

SumNormalForm to_sum_normal(const PpFormula& f, Trace* trace = nullptr);
ConjNormalForm to_conj_normal(const PpFormula& f, Trace* trace = nullptr);

PpFormula formula_of(const SumNormalForm& f);
PpFormula formula_of(const ConjNormalForm& f);

/// Definable subgroup of the point cut out by the formula. Matrix forms are
/// normalized first.
SubgroupDesc eval(const PpFormula& f, const ModulePoint& n);
SubgroupDesc eval(const SumNormalForm& f, const ModulePoint& n);
SubgroupDesc eval(const ConjNormalForm& f, const ModulePoint& n);

/// phi(N) contained in psi(N) for every N in the family.
bool lattice_leq(const PpFormula& phi, const PpFormula& psi,
                 const std::vector<ModulePoint>& family);

/// The evaluation family used by normalization soundness checks:
/// E_t(k) for the given points and 1 <= k <= max_k, plus Q.
std::vector<ModulePoint> standard_family(const std::vector<GaussRational>& points,
                                         unsigned max_k);

} // namespace zg
