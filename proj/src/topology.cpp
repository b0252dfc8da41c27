#include "zg/topology.hpp"

#include <algorithm>
#include <climits>

#include "zg/errors.hpp"

namespace zg {

PairScalar PairScalar::exact(Poly p) {
    PairScalar s;
    s.kind = Kind::ExactPoly;
    s.poly = std::move(p);
    return s;
}

PairScalar PairScalar::exact_split(SplitScalar sp) {
    PairScalar s;
    s.kind = Kind::ExactSplit;
    s.split = std::move(sp);
    return s;
}

PairScalar PairScalar::symbolic(TailDivisor t) {
    PairScalar s;
    s.kind = Kind::Tail;
    s.tail = std::move(t);
    return s;
}

Poly PairScalar::as_poly() const {
    switch (kind) {
    case Kind::ExactPoly: return poly;
    case Kind::ExactSplit: return to_poly(split);
    case Kind::Tail: throw DomainError("tail-tier scalar has no polynomial form");
    }
    return {};
}

std::optional<FiniteDivisor> PairScalar::known_roots() const {
    if (kind == Kind::ExactSplit) return split.divisor;
    if (kind == Kind::ExactPoly && poly.is_constant() && !poly.is_zero())
        return FiniteDivisor::unit_class();
    return std::nullopt;
}

std::string PairScalar::str() const {
    switch (kind) {
    case Kind::ExactPoly: return poly.str();
    case Kind::ExactSplit: return split.str();
    case Kind::Tail: return tail.str();
    }
    return {};
}

bool BasicOpenPair::exact_tier() const {
    return a.is_exact() && b.is_exact() && c.is_exact() && d.is_exact();
}

bool BasicOpenPair::tail_tier() const {
    return a.kind == PairScalar::Kind::Tail && b.kind == PairScalar::Kind::Tail &&
           c.kind == PairScalar::Kind::Tail && d.kind == PairScalar::Kind::Tail;
}

void BasicOpenPair::require_consistent() const {
    if (!exact_tier() && !tail_tier())
        throw DomainError("basic open pair mixes exact and tail scalars");
}

PpFormula BasicOpenPair::phi() const {
    return PpFormula::conj(PpFormula::divides(a.as_poly()), PpFormula::ann(b.as_poly()));
}

PpFormula BasicOpenPair::psi() const {
    return PpFormula::sum(PpFormula::divides(c.as_poly()), PpFormula::ann(d.as_poly()));
}

std::string BasicOpenPair::str() const {
    return "pair(" + a.str() + "; " + b.str() + "; " + c.str() + "; " + d.str() + ")";
}

BasicOpenPair isolation_pair(const GaussRational& t, unsigned n) {
    if (n == 0) throw DomainError("isolation pair needs n >= 1");
    BasicOpenPair p;
    p.a = PairScalar::exact_split(SplitScalar{GaussRational(1), FiniteDivisor::unit_class()});
    p.b = PairScalar::exact_split(SplitScalar{GaussRational(1), FiniteDivisor::single(t, n)});
    p.c = PairScalar::exact_split(SplitScalar{GaussRational(1), FiniteDivisor::single(t, 1)});
    p.d = PairScalar::exact_split(SplitScalar{GaussRational(1), FiniteDivisor::single(t, n - 1)});
    return p;
}

bool contains_point(const BasicOpenPair& pair, const ModulePoint& n) {
    pair.require_consistent();
    if (!pair.exact_tier()) throw DomainError("contains_point needs an exact-tier pair");
    SubgroupDesc p = eval(pair.phi(), n), q = eval(pair.psi(), n);
    return !subgroup_leq(p, q);
}

namespace {

bool le_ev(const IntPoly& p, const IntPoly& q) {
    IntPoly diff = q - p;
    return diff.is_zero() || diff.leading().sign() > 0;
}

// Eventual interval of feasible shift polynomials, with an optional strict
// degree cap coming from degree cuts.
struct ShiftInterval {
    std::optional<IntPoly> lo, hi;
    int degree_cap = -1; // exclusive; -1 means none
    bool infeasible = false;
    std::vector<std::string>* log = nullptr;

    void note(const std::string& s) {
        if (log) log->push_back(s);
    }
    void add_lower(IntPoly p, const std::string& why) {
        note("shift >= " + p.str() + "  (" + why + ")");
        if (!lo || le_ev(*lo, p)) lo = std::move(p);
    }
    void add_upper(IntPoly p, const std::string& why) {
        note("shift <= " + p.str() + "  (" + why + ")");
        if (!hi || le_ev(p, *hi)) hi = std::move(p);
    }
    void add_cap(unsigned d, const std::string& why) {
        note("deg(shift) < " + std::to_string(d) + "  (" + why + ")");
        int cap = static_cast<int>(d);
        if (degree_cap < 0 || cap < degree_cap) degree_cap = cap;
    }
    void fail(const std::string& why) {
        note("infeasible: " + why);
        infeasible = true;
    }

    std::optional<IntPoly> solve() {
        if (infeasible) return std::nullopt;
        if (lo && hi && !le_ev(*lo, *hi)) {
            note("infeasible: lower bound exceeds upper bound eventually");
            return std::nullopt;
        }
        IntPoly zero;
        IntPoly sigma;
        bool zero_ok = (!lo || le_ev(*lo, zero)) && (!hi || le_ev(zero, *hi));
        if (zero_ok)
            sigma = zero;
        else if (lo && !le_ev(*lo, zero))
            sigma = *lo;
        else
            sigma = *hi;
        if (degree_cap >= 0 && sigma.degree() >= degree_cap) {
            note("infeasible: minimal shift degree " + std::to_string(sigma.degree()) +
                 " violates the degree cap");
            return std::nullopt;
        }
        note("feasible shift: " + sigma.str());
        return sigma;
    }
};

// Multiplicity data of one scalar relative to the triple's tier; nullopt
// means the zero ring element (member of every ideal).
using FixedMult = std::optional<long>;
using FreeMult = std::optional<IntPoly>;

FixedMult fixed_mult(const PairScalar& s, const GaussRational& t) {
    if (s.is_zero_scalar()) return std::nullopt;
    return static_cast<long>(s.as_poly().multiplicity_at(t));
}

FreeMult free_mult(const PairScalar& s) {
    if (s.kind == PairScalar::Kind::Tail) return s.tail.multiplicity.tail();
    if (s.is_zero_scalar()) return std::nullopt;
    // A nonzero polynomial vanishes at finitely many support points only.
    return IntPoly(0);
}

TripleMembership contains_fixed(const BasicOpenPair& pair, const AdmissibleTriple& tr) {
    TripleMembership out;
    const GaussRational& t = tr.u.t;
    FixedMult ma = fixed_mult(pair.a, t), mb = fixed_mult(pair.b, t);
    FixedMult mc = fixed_mult(pair.c, t), md = fixed_mult(pair.d, t);
    auto log = [&](const std::string& s) { out.transcript.push_back(s); };

    bool has_i = !tr.i.is_zero(), has_j = !tr.j.is_zero();
    long k = has_i ? tr.i.k : 0, l = has_j ? tr.j.k : 0;
    // Signed shift sigma maps (I, J) to (I - sigma, J + sigma).
    long lo = LONG_MIN / 4, hi = LONG_MAX / 4;
    auto need = [&](bool cond, const std::string& why) {
        if (!cond) {
            log("fails: " + why);
            out.contained = false;
        }
        return cond;
    };

    // b in I'
    if (has_i) {
        if (mb) {
            lo = std::max(lo, k - *mb);
            log("b in I': shift >= " + std::to_string(k - *mb));
        } else {
            log("b = 0 lies in every annihilator cut");
        }
    } else if (!need(!mb.has_value(), "b must be the zero element to lie in the zero ideal")) {
        return out;
    }
    // a notin J'
    if (has_j) {
        if (!need(ma.has_value(), "a = 0 lies in every cut, so a notin J' fails")) return out;
        lo = std::max(lo, *ma - l + 1);
        log("a notin J': shift >= " + std::to_string(*ma - l + 1));
    } else if (!need(ma.has_value(), "a must be nonzero to avoid the zero ideal")) {
        return out;
    }
    // c in J'
    if (has_j) {
        if (mc) {
            hi = std::min(hi, *mc - l);
            log("c in J': shift <= " + std::to_string(*mc - l));
        } else {
            log("c = 0 lies in every divisibility cut");
        }
    } else if (!need(!mc.has_value(), "c must be the zero element to lie in the zero ideal")) {
        return out;
    }
    // d notin I'
    if (has_i) {
        if (!need(md.has_value(), "d = 0 lies in every cut, so d notin I' fails")) return out;
        hi = std::min(hi, k - *md - 1);
        log("d notin I': shift <= " + std::to_string(k - *md - 1));
    } else if (!need(md.has_value(), "d must be nonzero to avoid the zero ideal")) {
        return out;
    }
    // Shifted cuts stay proper.
    if (has_i) hi = std::min(hi, k - 1);
    if (has_j) lo = std::max(lo, 1 - l);

    if (lo > hi) {
        log("infeasible: shift window empty (" + std::to_string(lo) + " > " + std::to_string(hi) +
            ")");
        return out;
    }
    long sigma = 0;
    if (lo > 0)
        sigma = lo;
    else if (hi < 0)
        sigma = hi;
    out.contained = true;
    out.fixed_shift = sigma;
    out.shift = IntPoly(sigma);
    log("feasible shift: " + std::to_string(sigma) + " (I' = " +
        (has_i ? std::to_string(k - sigma) : std::string("0")) + ", J' = " +
        (has_j ? std::to_string(l + sigma) : std::string("0")) + ")");
    return out;
}

TripleMembership contains_free(const BasicOpenPair& pair, const AdmissibleTriple& tr) {
    TripleMembership out;
    FreeMult ma = free_mult(pair.a), mb = free_mult(pair.b);
    FreeMult mc = free_mult(pair.c), md = free_mult(pair.d);
    ShiftInterval iv;
    iv.log = &out.transcript;

    // Membership in a degree cut is shift-independent.
    auto deg_of = [](const FreeMult& m) { return m ? m->degree() : INT_MAX; };

    // b in I'
    switch (tr.i.kind) {
    case Cut::Kind::Zero:
        if (mb) iv.fail("b must be the zero element to lie in the zero ideal");
        break;
    case Cut::Kind::PrincipalAbove:
        if (mb) iv.add_lower(tr.i.gamma.tail() - *mb, "b in I'");
        break;
    case Cut::Kind::DegreeAtLeast:
        if (deg_of(mb) < static_cast<int>(tr.i.d)) iv.fail("b has multiplicity degree below I");
        iv.add_cap(tr.i.d, "I is a degree cut");
        break;
    default: break;
    }
    // a notin J'
    switch (tr.j.kind) {
    case Cut::Kind::Zero:
        if (!ma) iv.fail("a must be nonzero to avoid the zero ideal");
        break;
    case Cut::Kind::PrincipalAbove:
        if (!ma)
            iv.fail("a = 0 lies in every cut, so a notin J' fails");
        else
            iv.add_lower(*ma - tr.j.gamma.tail() + IntPoly(1), "a notin J'");
        break;
    case Cut::Kind::DegreeAtLeast:
        if (!ma || deg_of(ma) >= static_cast<int>(tr.j.d))
            iv.fail("a lies in the degree cut J");
        iv.add_cap(tr.j.d, "J is a degree cut");
        break;
    default: break;
    }
    // c in J'
    switch (tr.j.kind) {
    case Cut::Kind::Zero:
        if (mc) iv.fail("c must be the zero element to lie in the zero ideal");
        break;
    case Cut::Kind::PrincipalAbove:
        if (mc) iv.add_upper(*mc - tr.j.gamma.tail(), "c in J'");
        break;
    case Cut::Kind::DegreeAtLeast:
        if (deg_of(mc) < static_cast<int>(tr.j.d)) iv.fail("c has multiplicity degree below J");
        break;
    default: break;
    }
    // d notin I'
    switch (tr.i.kind) {
    case Cut::Kind::Zero:
        if (!md) iv.fail("d must be nonzero to avoid the zero ideal");
        break;
    case Cut::Kind::PrincipalAbove:
        if (!md)
            iv.fail("d = 0 lies in every cut, so d notin I' fails");
        else
            iv.add_upper(tr.i.gamma.tail() - *md - IntPoly(1), "d notin I'");
        break;
    case Cut::Kind::DegreeAtLeast:
        if (!md || deg_of(md) >= static_cast<int>(tr.i.d)) iv.fail("d lies in the degree cut I");
        break;
    default: break;
    }
    // Shifted principal cuts stay proper (eventually >= 1).
    if (tr.i.kind == Cut::Kind::PrincipalAbove)
        iv.add_upper(tr.i.gamma.tail() - IntPoly(1), "I - shift stays proper");
    if (tr.j.kind == Cut::Kind::PrincipalAbove)
        iv.add_lower(IntPoly(1) - tr.j.gamma.tail(), "J + shift stays proper");

    auto sigma = iv.solve();
    if (!sigma) return out;
    out.contained = true;
    out.shift = *sigma;
    return out;
}

} // namespace

TripleMembership contains_triple(const BasicOpenPair& pair, const AdmissibleTriple& tr) {
    pair.require_consistent();
    require_valid(tr);
    switch (tr.u.kind) {
    case UltrafilterSpec::Kind::Empty: {
        // Membership at Q: phi(Q) full, psi(Q) not full.
        if (!pair.exact_tier())
            throw DomainError("tier mismatch: tail-tier pair against the empty-ultrafilter triple");
        TripleMembership out;
        bool a_nz = !pair.a.is_zero_scalar(), b_z = pair.b.is_zero_scalar();
        bool c_z = pair.c.is_zero_scalar(), d_nz = !pair.d.is_zero_scalar();
        out.contained = a_nz && b_z && c_z && d_nz;
        out.transcript.push_back(out.contained
                                     ? "phi(Q) is full and psi(Q) is zero"
                                     : "phi(Q) is contained in psi(Q) at the field point");
        return out;
    }
    case UltrafilterSpec::Kind::Fixed:
        if (!pair.exact_tier())
            throw DomainError("tier mismatch: tail-tier pair against a fixed-tier triple");
        return contains_fixed(pair, tr);
    case UltrafilterSpec::Kind::FreeTail:
        return contains_free(pair, tr);
    }
    return {};
}

namespace {

std::vector<GaussRational> probe_points(const BasicOpenPair& pair, unsigned seed,
                                        bool& splits_known) {
    splits_known = true;
    std::vector<GaussRational> points;
    auto add_scalar = [&](const PairScalar& s) {
        if (s.is_zero_scalar()) return;
        auto roots = s.known_roots();
        if (!roots) {
            splits_known = false;
            return;
        }
        for (auto& [t, m] : roots->support())
            if (std::find(points.begin(), points.end(), t) == points.end()) points.push_back(t);
    };
    add_scalar(pair.a);
    add_scalar(pair.b);
    add_scalar(pair.c);
    add_scalar(pair.d);
    // One fresh non-root probe covers unit-like behavior away from all roots;
    // the support is finite, so a fresh integer point always exists.
    for (long re = 0; re <= static_cast<long>(points.size()) + 1; ++re) {
        GaussRational cand{Rational(re)};
        if (std::find(points.begin(), points.end(), cand) == points.end()) {
            points.push_back(cand);
            break;
        }
    }
    if (seed != 0 && points.size() > 1)
        std::rotate(points.begin(), points.begin() + (seed % points.size()), points.end());
    return points;
}

unsigned long to_ulong(const BigInt& v) { return static_cast<unsigned long>(v.to_long()); }

WitnessReport inhabit_tail(const BasicOpenPair& pair) {
    WitnessReport out;
    const EPSeq& ma = pair.a.tail.multiplicity;
    const EPSeq& mb = pair.b.tail.multiplicity;
    const EPSeq& mc = pair.c.tail.multiplicity;
    const EPSeq& md = pair.d.tail.multiplicity;
    out.transcript.push_back("density conditions: mu_a < mu_c and mu_d < mu_b at some index");

    // Settle point after which all four eventual comparisons are decided.
    unsigned long settle = std::max({ma.threshold(), mb.threshold(), mc.threshold(),
                                     md.threshold()});
    auto settle_of = [&](const EPSeq& x, const EPSeq& y) -> unsigned long {
        // Index from which sign(y - x) matches its eventual sign.
        IntPoly diff = y.tail() - x.tail();
        if (diff.is_zero()) return 0;
        if (diff.leading().sign() > 0) return diff.positive_from(0);
        return (-diff).positive_from(0);
    };
    settle = std::max({settle, settle_of(ma, mc), settle_of(md, mb)});

    for (unsigned long n = 0; n <= settle + 1; ++n) {
        BigInt va = ma.value_at(n), vb = mb.value_at(n), vc = mc.value_at(n), vd = md.value_at(n);
        if (!(va < vc && vd < vb)) continue;
        unsigned long k = to_ulong(va) + to_ulong(vd) + 1;
        unsigned long j = std::max(to_ulong(va), k > to_ulong(vb) ? k - to_ulong(vb) : 0);
        out.tail_index = n;
        out.point = ModulePoint::finite_length(GaussRational(Rational(static_cast<long>(n))),
                                               static_cast<unsigned>(k));
        out.element = static_cast<unsigned>(j);
        out.phi_exponent = static_cast<unsigned>(j);
        out.psi_exponent = static_cast<unsigned>(
            std::min(to_ulong(vc), k - std::min(to_ulong(vd), k)));
        out.transcript.push_back("support index " + std::to_string(n) +
                                 " materialized at the Gaussian integer " + std::to_string(n));
        out.transcript.push_back("multiplicities: a=" + va.str() + " b=" + vb.str() +
                                 " c=" + vc.str() + " d=" + vd.str());
        out.transcript.push_back("witness E_t(" + std::to_string(k) + "), element (z-t)^" +
                                 std::to_string(j));
        return out;
    }
    out.empty = true;
    out.transcript.push_back(
        "no support index satisfies the density inequalities; eventual comparison settled after "
        "index " +
        std::to_string(settle));
    return out;
}

} // namespace

bool WitnessReport::replay(const BasicOpenPair& pair) const {
    if (empty) {
        if (!pair.exact_tier()) return true; // certificate is the scan transcript
        return lattice_leq(pair.phi(), pair.psi(), certificate_family);
    }
    if (pair.tail_tier()) {
        if (!tail_index) return false;
        unsigned long n = *tail_index;
        BigInt va = pair.a.tail.multiplicity.value_at(n);
        BigInt vb = pair.b.tail.multiplicity.value_at(n);
        BigInt vc = pair.c.tail.multiplicity.value_at(n);
        BigInt vd = pair.d.tail.multiplicity.value_at(n);
        const long k = point.k, j = element;
        auto clamp = [&](const BigInt& m) { return std::min(m, BigInt(k)).to_long(); };
        long ephi = std::max(clamp(va), k - clamp(vb));
        long epsi = std::min(clamp(vc), k - clamp(vd));
        return ephi <= j && j < epsi;
    }
    SubgroupDesc p = eval(pair.phi(), point), q = eval(pair.psi(), point);
    return p.kind == SubgroupDesc::Kind::Exponent && q.kind == SubgroupDesc::Kind::Exponent &&
           p.exponent == phi_exponent && q.exponent == psi_exponent && element >= p.exponent &&
           element < q.exponent;
}

WitnessReport inhabit(const BasicOpenPair& pair, const InhabitOptions& opts) {
    pair.require_consistent();
    if (pair.tail_tier()) return inhabit_tail(pair);

    bool splits_known = true;
    std::vector<GaussRational> points = probe_points(pair, opts.seed, splits_known);
    if (!splits_known)
        throw DomainError("unsplit exact scalar; provide scalars in split form for inhabit");

    unsigned long bound = 1;
    for (auto* s : {&pair.a, &pair.b, &pair.c, &pair.d}) {
        auto roots = s->known_roots();
        if (roots) bound = std::max(bound, roots->total_multiplicity() + 1);
    }
    if (opts.max_k > 0) bound = opts.max_k;

    WitnessReport out;
    PpFormula phi = pair.phi(), psi = pair.psi();
    out.transcript.push_back("search bound k <= " + std::to_string(bound));
    std::vector<ModulePoint> family;
    for (auto& t : points) {
        for (unsigned k = 1; k <= bound; ++k) {
            ModulePoint n = ModulePoint::finite_length(t, k);
            family.push_back(n);
            SubgroupDesc p = eval(phi, n), q = eval(psi, n);
            if (subgroup_leq(p, q)) continue;
            out.point = n;
            out.phi_exponent = p.exponent;
            out.psi_exponent = q.exponent;
            out.element = p.exponent;
            out.transcript.push_back("witness " + n.str() + ": phi exponent " +
                                     std::to_string(p.exponent) + ", psi exponent " +
                                     std::to_string(q.exponent) + ", element (z-t)^" +
                                     std::to_string(p.exponent));
            return out;
        }
    }
    family.push_back(ModulePoint::q_field());
    out.empty = true;
    out.certificate_family = family;
    if (!lattice_leq(phi, psi, family))
        throw DomainError("inhabit: search missed a witness inside its own family");
    out.transcript.push_back("phi <= psi on all " + std::to_string(family.size()) +
                             " family points; the pair is trivial over the probed family");
    return out;
}

DerivativePair cb_derivative_pair(const BasicOpenPair& pair) {
    pair.require_consistent();
    if (pair.tail_tier()) {
        return {pair, false,
                "tail divisors are not polynomials; the pair is unchanged by localization at "
                "nonzero polynomials"};
    }
    auto residue = [](const PairScalar& s) {
        return PairScalar::exact(s.is_zero_scalar() ? Poly::zero() : Poly::one());
    };
    DerivativePair out;
    out.simplified.a = residue(pair.a);
    out.simplified.b = residue(pair.b);
    out.simplified.c = residue(pair.c);
    out.simplified.d = residue(pair.d);
    bool opens = !pair.a.is_zero_scalar() && pair.b.is_zero_scalar() &&
                 pair.c.is_zero_scalar() && !pair.d.is_zero_scalar();
    out.empty_in_derivative = !opens;
    out.note = opens
                   ? "nonzero scalars became units; the pair still opens free points, and its "
                     "support contains no isolated finite-length points"
                   : "nonzero scalars became units and the pair collapses to an empty set in "
                     "the derivative space";
    return out;
}

SuperdecomposabilityReport is_superdecomposable_candidate(
    const std::variant<FiniteDivisor, TailDivisor>& scalar) {
    SuperdecomposabilityReport out;
    if (std::holds_alternative<FiniteDivisor>(scalar)) {
        const FiniteDivisor& f = std::get<FiniteDivisor>(scalar);
        if (f.is_unit_class()) {
            out.reason = "unit class: no nonunit divisors at all";
            return out;
        }
        // Any one-point nonunit divisor of f blocks the criterion.
        auto it = f.support().begin();
        out.blocking_divisor = FiniteDivisor::single(it->first, 1);
        out.finite_split = split_coprime(f); // may be empty for one-point support
        out.reason = out.finite_split
                         ? "the divisor itself splits, but its one-point subdivisor cannot"
                         : "one-point support cannot split into coprime nonunits";
        return out;
    }
    const TailDivisor& f = std::get<TailDivisor>(scalar);
    if (!f.infinite_support()) {
        out.reason = "finite support tail divisor behaves like the finite tier";
        return out;
    }
    out.candidate = true;
    out.tail_split = split_coprime(f);
    out.reason = "infinite support splits along the even/odd index partition into coprime "
                 "nonunits, and so does every nonunit divisor of it";
    return out;
}

DenseChainWitness dense_chain_check(const EPSeq& mu, const EPSeq& nu) {
    DenseChainWitness out;
    out.midpoint = dense_between(mu, nu);
    out.left_strict_from = strict_order_from(mu, out.midpoint);
    out.right_strict_from = strict_order_from(out.midpoint, nu);
    if (fin_equiv(mu, out.midpoint) || fin_equiv(out.midpoint, nu))
        throw DomainError("dense_chain_check produced a finitely equivalent midpoint");
    out.transcript.push_back("midpoint " + out.midpoint.str());
    out.transcript.push_back("mu < midpoint pointwise from index " +
                             std::to_string(out.left_strict_from) + ", gap unbounded");
    out.transcript.push_back("midpoint < nu pointwise from index " +
                             std::to_string(out.right_strict_from) + ", gap unbounded");
    out.transcript.push_back(
        "in the derivative pp-lattice the divisibility chain at the midpoint and the "
        "annihilator chain at the midpoint give a 2x2 incomparable sublattice between the "
        "classes of the endpoints: div(" + out.midpoint.str() + ") vs ann(" +
        out.midpoint.str() + ")");
    return out;
}

} // namespace zg
