#include "zg/semantics.hpp"

#include <algorithm>

#include "zg/errors.hpp"

namespace zg {

ModulePoint ModulePoint::finite_length(GaussRational t, unsigned k) {
    if (k == 0) throw DomainError("finite length point needs k >= 1");
    ModulePoint p;
    p.kind = Kind::FiniteLength;
    p.t = std::move(t);
    p.k = k;
    return p;
}

std::string ModulePoint::str() const {
    if (kind == Kind::QField) return "Q";
    return "E(" + t.str() + "," + std::to_string(k) + ")";
}

std::string SubgroupDesc::str() const {
    switch (kind) {
    case Kind::Exponent: return "exponent " + std::to_string(exponent);
    case Kind::Full: return "full";
    case Kind::Zero: return "zero";
    }
    return {};
}

bool subgroup_leq(const SubgroupDesc& a, const SubgroupDesc& b) {
    if (a.kind == SubgroupDesc::Kind::Exponent || b.kind == SubgroupDesc::Kind::Exponent) {
        if (a.kind != b.kind) throw DomainError("subgroup comparison across point kinds");
        return a.exponent >= b.exponent;
    }
    if (a.kind == SubgroupDesc::Kind::Zero) return true;
    if (b.kind == SubgroupDesc::Kind::Full) return true;
    return false;
}

namespace {

Poly gcd0(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) return Poly::zero();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    return Poly::gcd(f, g);
}

Poly lcm0(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero();
    return Poly::lcm(f, g);
}

void trace_line(Trace* trace, const std::string& line) {
    if (trace) trace->push_back(line);
}

// Zero set reduction for a sum atom a|x & xb=0: the divisibility scalar may
// drop all factors coprime to b.
NormalPair reduce_sum_atom(NormalPair p, Trace* trace) {
    if (!p.second.is_zero() && !p.second.is_unit() && !p.first.is_zero() &&
        !p.first.is_constant()) {
        auto [coprime_part, shared_part] = p.first.saturate_against(p.second);
        if (!coprime_part.is_constant()) {
            trace_line(trace, "zero-set reduction: " + p.first.str() + " -> " +
                                  shared_part.str() + " against annihilator " + p.second.str());
            p.first = shared_part;
        }
    }
    return p;
}

// Dual reduction for a conjunction pair c|x + xd=0 on the annihilator scalar.
NormalPair reduce_conj_pair(NormalPair p, Trace* trace) {
    if (!p.first.is_zero() && !p.first.is_unit() && !p.second.is_zero() &&
        !p.second.is_constant()) {
        auto [coprime_part, shared_part] = p.second.saturate_against(p.first);
        if (!coprime_part.is_constant()) {
            trace_line(trace, "zero-set reduction: " + p.second.str() + " -> " +
                                  shared_part.str() + " against divisor " + p.first.str());
            p.second = shared_part;
        }
    }
    return p;
}

// Internal representation: empty pair list means the trivial formula for
// conjunction forms and the zero formula for sum forms.

bool sum_atom_is_zero(const NormalPair& p) {
    return p.first.is_zero() || p.second.is_unit();
}

bool sum_atom_is_trivial(const NormalPair& p) {
    return p.first.is_unit() && p.second.is_zero();
}

bool conj_pair_is_trivial(const NormalPair& p) {
    return p.first.is_unit() || p.second.is_zero();
}

bool conj_pair_is_zero(const NormalPair& p) {
    return p.first.is_zero() && p.second.is_unit();
}

std::vector<NormalPair> simplify_sum(std::vector<NormalPair> atoms, Trace* trace) {
    for (auto& a : atoms)
        if (sum_atom_is_trivial(a)) {
            trace_line(trace, "sum form collapses to the trivial formula");
            return {NormalPair{Poly::one(), Poly::zero()}};
        }
    std::vector<NormalPair> out;
    for (auto& a : atoms) {
        if (sum_atom_is_zero(a)) continue;
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
    return out;
}

std::vector<NormalPair> simplify_conj(std::vector<NormalPair> pairs, Trace* trace) {
    for (auto& p : pairs)
        if (conj_pair_is_zero(p)) {
            trace_line(trace, "conjunction form collapses to x=0");
            return {NormalPair{Poly::zero(), Poly::one()}};
        }
    std::vector<NormalPair> out;
    for (auto& p : pairs) {
        if (conj_pair_is_trivial(p)) continue;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

// Columns of U A V = D decouple into cyclic conditions z_j d_j = x c_j with
// c = rhs * V; each one rewrites to (d_j/gcd | x) + (x c_j = 0).
std::vector<NormalPair> matrix_conj_pairs(const PpFormula& f, Trace* trace) {
    PolyMatrix a(f.rows(), f.cols());
    for (size_t i = 0; i < f.rows(); ++i)
        for (size_t j = 0; j < f.cols(); ++j) a.at(i, j) = f.entry(i, j);
    SmithDecomposition snf = smith_normal_form(a);
    trace_line(trace, "smith: U=" + snf.u.str() + " D=" + snf.d.str() + " V=" + snf.v.str());

    std::vector<Poly> c(f.cols());
    for (size_t j = 0; j < f.cols(); ++j) {
        Poly acc;
        for (size_t i = 0; i < f.cols(); ++i) acc = acc + f.rhs()[i] * snf.v.at(i, j);
        c[j] = acc;
    }
    {
        std::string s = "[";
        for (size_t j = 0; j < c.size(); ++j) s += (j ? "," : "") + c[j].str();
        trace_line(trace, "transformed rhs: c = b*V = " + s + "]");
    }

    std::vector<NormalPair> pairs;
    const size_t diag = std::min(f.rows(), f.cols());
    for (size_t j = 0; j < f.cols(); ++j) {
        const Poly cj = c[j];
        if (cj.is_zero()) continue; // condition z*d = 0 is satisfied by z = 0
        if (j >= diag || snf.d.at(j, j).is_zero()) {
            trace_line(trace, "column " + std::to_string(j + 1) + ": 0 = x*(" + cj.str() +
                                  ") -> annihilator pair");
            pairs.push_back(reduce_conj_pair({Poly::zero(), cj}, trace));
            continue;
        }
        const Poly& dj = snf.d.at(j, j);
        Poly g = gcd0(dj, cj);
        Poly dprime = Poly::divmod(dj, g).first;
        if (dprime.is_constant()) {
            trace_line(trace, "column " + std::to_string(j + 1) + ": " + dj.str() +
                                  " divides x*(" + cj.str() + ") identically");
            continue;
        }
        trace_line(trace, "column " + std::to_string(j + 1) + ": (" + dj.str() + " | x*(" +
                              cj.str() + ")) -> (" + dprime.str() + " | x) + (x*(" + cj.str() +
                              ") = 0)");
        pairs.push_back(reduce_conj_pair({dprime.monic(), cj}, trace));
    }
    return pairs;
}

std::vector<NormalPair> conj_pairs_of(const PpFormula& f, Trace* trace);

std::vector<NormalPair> sum_atoms_of(const PpFormula& f, Trace* trace) {
    switch (f.kind()) {
    case PpFormula::Kind::Divides:
        if (f.scalar().is_unit()) return {NormalPair{Poly::one(), Poly::zero()}};
        return {NormalPair{f.scalar(), Poly::zero()}};
    case PpFormula::Kind::Ann:
        if (f.scalar().is_zero()) return {NormalPair{Poly::one(), Poly::zero()}};
        if (f.scalar().is_unit()) return {NormalPair{Poly::zero(), Poly::zero()}};
        return {NormalPair{Poly::one(), f.scalar()}};
    case PpFormula::Kind::Sum: {
        auto l = sum_atoms_of(f.left(), trace);
        auto r = sum_atoms_of(f.right(), trace);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    case PpFormula::Kind::Conj: {
        auto l = sum_atoms_of(f.left(), trace);
        auto r = sum_atoms_of(f.right(), trace);
        std::vector<NormalPair> out;
        for (auto& p : l)
            for (auto& q : r)
                out.push_back(reduce_sum_atom({lcm0(p.first, q.first), gcd0(p.second, q.second)},
                                              trace));
        return out;
    }
    case PpFormula::Kind::MatrixForm: {
        auto pairs = simplify_conj(matrix_conj_pairs(f, trace), trace);
        // Distribute the conjunction of sums over the chain of definable
        // subgroups: one atom per choice of summand in each pair.
        const size_t m = pairs.size();
        if (m == 0) return {NormalPair{Poly::one(), Poly::zero()}};
        if (m > 20) throw DomainError("matrix form too large to expand into a sum form");
        trace_line(trace, "expanding " + std::to_string(size_t{1} << m) +
                              " summand choices into sum atoms");
        std::vector<NormalPair> out;
        for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
            Poly a = Poly::one();
            Poly b = Poly::zero();
            for (size_t j = 0; j < m; ++j) {
                if (mask & (size_t{1} << j))
                    a = lcm0(a, pairs[j].first);
                else
                    b = gcd0(b, pairs[j].second);
            }
            out.push_back(reduce_sum_atom({std::move(a), std::move(b)}, trace));
        }
        return out;
    }
    }
    return {};
}

std::vector<NormalPair> conj_pairs_of(const PpFormula& f, Trace* trace) {
    switch (f.kind()) {
    case PpFormula::Kind::Divides:
        if (f.scalar().is_unit()) return {};
        if (f.scalar().is_zero()) return {NormalPair{Poly::zero(), Poly::one()}};
        return {NormalPair{f.scalar(), Poly::one()}};
    case PpFormula::Kind::Ann:
        if (f.scalar().is_zero()) return {};
        if (f.scalar().is_unit()) return {NormalPair{Poly::zero(), Poly::one()}};
        return {NormalPair{Poly::zero(), f.scalar()}};
    case PpFormula::Kind::Conj: {
        auto l = conj_pairs_of(f.left(), trace);
        auto r = conj_pairs_of(f.right(), trace);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    }
    case PpFormula::Kind::Sum: {
        auto l = conj_pairs_of(f.left(), trace);
        auto r = conj_pairs_of(f.right(), trace);
        if (l.empty() || r.empty()) return {}; // sum with the trivial formula
        std::vector<NormalPair> out;
        for (auto& p : l)
            for (auto& q : r)
                out.push_back(reduce_conj_pair({gcd0(p.first, q.first), lcm0(p.second, q.second)},
                                               trace));
        return out;
    }
    case PpFormula::Kind::MatrixForm:
        return matrix_conj_pairs(f, trace);
    }
    return {};
}

} // namespace

SumNormalForm to_sum_normal(const PpFormula& f, Trace* trace) {
    auto atoms = simplify_sum(sum_atoms_of(f, trace), trace);
    if (atoms.empty()) atoms.push_back(NormalPair{Poly::zero(), Poly::zero()}); // x = 0
    return SumNormalForm{std::move(atoms)};
}

ConjNormalForm to_conj_normal(const PpFormula& f, Trace* trace) {
    auto pairs = simplify_conj(conj_pairs_of(f, trace), trace);
    if (pairs.empty()) pairs.push_back(NormalPair{Poly::one(), Poly::one()}); // x = x
    return ConjNormalForm{std::move(pairs)};
}

PpFormula formula_of(const SumNormalForm& f) {
    PpFormula out = PpFormula::conj(PpFormula::divides(f.pairs[0].first),
                                    PpFormula::ann(f.pairs[0].second));
    for (size_t i = 1; i < f.pairs.size(); ++i)
        out = PpFormula::sum(std::move(out), PpFormula::conj(PpFormula::divides(f.pairs[i].first),
                                                             PpFormula::ann(f.pairs[i].second)));
    return out;
}

PpFormula formula_of(const ConjNormalForm& f) {
    PpFormula out = PpFormula::sum(PpFormula::divides(f.pairs[0].first),
                                   PpFormula::ann(f.pairs[0].second));
    for (size_t i = 1; i < f.pairs.size(); ++i)
        out = PpFormula::conj(std::move(out), PpFormula::sum(PpFormula::divides(f.pairs[i].first),
                                                             PpFormula::ann(f.pairs[i].second)));
    return out;
}

std::string SumNormalForm::str() const { return formula_of(*this).str(); }
std::string ConjNormalForm::str() const { return formula_of(*this).str(); }

namespace {

SubgroupDesc eval_divides(const Poly& a, const ModulePoint& n) {
    if (n.kind == ModulePoint::Kind::QField) {
        return a.is_zero() ? SubgroupDesc::zero() : SubgroupDesc::full();
    }
    if (a.is_zero()) return SubgroupDesc::exp(n.k);
    unsigned m = a.multiplicity_at(n.t);
    return SubgroupDesc::exp(std::min(m, n.k));
}

SubgroupDesc eval_ann(const Poly& b, const ModulePoint& n) {
    if (n.kind == ModulePoint::Kind::QField) {
        return b.is_zero() ? SubgroupDesc::full() : SubgroupDesc::zero();
    }
    if (b.is_zero()) return SubgroupDesc::exp(0);
    unsigned m = b.multiplicity_at(n.t);
    return SubgroupDesc::exp(m >= n.k ? 0 : n.k - m);
}

SubgroupDesc meet(const SubgroupDesc& a, const SubgroupDesc& b) { // intersection
    if (a.kind == SubgroupDesc::Kind::Exponent)
        return SubgroupDesc::exp(std::max(a.exponent, b.exponent));
    if (a.kind == SubgroupDesc::Kind::Full && b.kind == SubgroupDesc::Kind::Full)
        return SubgroupDesc::full();
    return SubgroupDesc::zero();
}

SubgroupDesc join(const SubgroupDesc& a, const SubgroupDesc& b) { // sum of subgroups
    if (a.kind == SubgroupDesc::Kind::Exponent)
        return SubgroupDesc::exp(std::min(a.exponent, b.exponent));
    if (a.kind == SubgroupDesc::Kind::Full || b.kind == SubgroupDesc::Kind::Full)
        return SubgroupDesc::full();
    return SubgroupDesc::zero();
}

} // namespace

SubgroupDesc eval(const PpFormula& f, const ModulePoint& n) {
    switch (f.kind()) {
    case PpFormula::Kind::Divides: return eval_divides(f.scalar(), n);
    case PpFormula::Kind::Ann: return eval_ann(f.scalar(), n);
    case PpFormula::Kind::Conj: return meet(eval(f.left(), n), eval(f.right(), n));
    case PpFormula::Kind::Sum: return join(eval(f.left(), n), eval(f.right(), n));
    case PpFormula::Kind::MatrixForm: return eval(to_sum_normal(f), n);
    }
    return SubgroupDesc::full();
}

SubgroupDesc eval(const SumNormalForm& f, const ModulePoint& n) {
    SubgroupDesc acc = SubgroupDesc::zero();
    bool first = true;
    for (auto& p : f.pairs) {
        SubgroupDesc atom = meet(eval_divides(p.first, n), eval_ann(p.second, n));
        acc = first ? atom : join(acc, atom);
        first = false;
    }
    return acc;
}

SubgroupDesc eval(const ConjNormalForm& f, const ModulePoint& n) {
    SubgroupDesc acc = SubgroupDesc::full();
    bool first = true;
    for (auto& p : f.pairs) {
        SubgroupDesc pair = join(eval_divides(p.first, n), eval_ann(p.second, n));
        acc = first ? pair : meet(acc, pair);
        first = false;
    }
    return acc;
}

bool lattice_leq(const PpFormula& phi, const PpFormula& psi,
                 const std::vector<ModulePoint>& family) {
    for (auto& n : family)
        if (!subgroup_leq(eval(phi, n), eval(psi, n))) return false;
    return true;
}

std::vector<ModulePoint> standard_family(const std::vector<GaussRational>& points,
                                         unsigned max_k) {
    std::vector<ModulePoint> out;
    for (auto& t : points)
        for (unsigned k = 1; k <= max_k; ++k) out.push_back(ModulePoint::finite_length(t, k));
    out.push_back(ModulePoint::q_field());
    return out;
}

} // namespace zg
