#include "zg/cuts.hpp"

#include "zg/errors.hpp"

namespace zg {

Cut Cut::fixed_threshold(unsigned k) {
    if (k == 0) throw DomainError("fixed threshold cut needs k >= 1");
    Cut c;
    c.kind = Kind::FixedThreshold;
    c.k = k;
    return c;
}

Cut Cut::principal_above(EPSeq gamma) {
    if (!gamma.cofinitely_positive())
        throw DomainError("principal cut generator must be cofinitely >= 1");
    Cut c;
    c.kind = Kind::PrincipalAbove;
    // The cut is determined by eventual values; exceptional entries are
    // irrelevant and dropped for a canonical representative.
    c.gamma = EPSeq::make(gamma.tail());
    return c;
}

Cut Cut::degree_at_least(unsigned d) {
    if (d == 0) throw DomainError("degree cut needs d >= 1");
    Cut c;
    c.kind = Kind::DegreeAtLeast;
    c.d = d;
    return c;
}

bool Cut::operator==(const Cut& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
    case Kind::Zero: return true;
    case Kind::FixedThreshold: return k == o.k;
    case Kind::PrincipalAbove: return gamma.tail() == o.gamma.tail();
    case Kind::DegreeAtLeast: return d == o.d;
    }
    return false;
}

std::string Cut::str() const {
    switch (kind) {
    case Kind::Zero: return "0";
    case Kind::FixedThreshold: return std::to_string(k);
    case Kind::PrincipalAbove: return "above(" + gamma.tail().str() + ")";
    case Kind::DegreeAtLeast: return "deg(" + std::to_string(d) + ")";
    }
    return {};
}

std::string UltrafilterSpec::str() const {
    switch (kind) {
    case Kind::Fixed: return "fixed(" + t.str() + ")";
    case Kind::FreeTail: return "free";
    case Kind::Empty: return "empty";
    }
    return {};
}

std::string AdmissibleTriple::str() const {
    return "triple(" + u.str() + ", " + i.str() + ", " + j.str() + ")";
}

TripleValidation validate_triple(const AdmissibleTriple& tr) {
    auto fixed_tier = [](const Cut& c) {
        return c.kind == Cut::Kind::Zero || c.kind == Cut::Kind::FixedThreshold;
    };
    auto free_tier = [](const Cut& c) { return c.kind == Cut::Kind::Zero || c.is_free_tier(); };

    switch (tr.u.kind) {
    case UltrafilterSpec::Kind::Empty:
        if (!tr.i.is_zero() || !tr.j.is_zero())
            return {false, 0, "empty ultrafilter requires both cuts zero"};
        return {true, 1, "case 1: I = J = 0 over the empty ultrafilter (the field Q)"};
    case UltrafilterSpec::Kind::Fixed:
        if (!fixed_tier(tr.i) || !fixed_tier(tr.j))
            return {false, 0, "tier mismatch: fixed ultrafilter with a free-tier cut"};
        break;
    case UltrafilterSpec::Kind::FreeTail:
        if (!free_tier(tr.i) || !free_tier(tr.j))
            return {false, 0, "tier mismatch: free ultrafilter with a fixed-tier cut"};
        break;
    }
    if (tr.i.is_zero() && tr.j.is_zero())
        return {false, 0, "both cuts zero requires the empty ultrafilter"};
    if (tr.j.is_zero()) return {true, 2, "case 2: nonzero annihilator cut, zero divisibility cut"};
    if (tr.i.is_zero()) return {true, 3, "case 3: zero annihilator cut, nonzero divisibility cut"};
    return {true, 4,
            "case 4: both cuts nonzero over one ultrafilter; the sharps are comparable primes "
            "on the single chain"};
}

void require_valid(const AdmissibleTriple& tr) {
    TripleValidation v = validate_triple(tr);
    if (!v.ok) throw DomainError("invalid triple: " + v.detail);
}

bool is_weakly_prime(const Cut& c, std::string* reason) {
    auto note = [&](const std::string& s) {
        if (reason) *reason = s;
    };
    switch (c.kind) {
    case Cut::Kind::Zero:
        note("complement of the zero ideal is the nonzero elements, closed under lcm in a domain");
        break;
    case Cut::Kind::FixedThreshold:
        note("complement is multiplicities < k at the fixed point; max of two stays < k");
        break;
    case Cut::Kind::PrincipalAbove:
        note("complement is sequences eventually below the generator; the pointwise max of two "
             "such is still eventually below it (eventual total order)");
        break;
    case Cut::Kind::DegreeAtLeast:
        note("complement is tails of degree < d; the max of two keeps the larger degree, "
             "still < d");
        break;
    }
    return true;
}

Cut sharp(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::Zero: return Cut::zero();
    case Cut::Kind::FixedThreshold: return Cut::fixed_threshold(1);
    case Cut::Kind::PrincipalAbove: return Cut::principal_above(EPSeq::constant(1));
    case Cut::Kind::DegreeAtLeast: return c; // already prime
    }
    return Cut::zero();
}

bool is_prime_cut(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::Zero: return true;
    case Cut::Kind::FixedThreshold: return c.k == 1;
    case Cut::Kind::PrincipalAbove: return c.gamma.tail() == IntPoly(1);
    case Cut::Kind::DegreeAtLeast: return true; // scaling preserves tail degree
    }
    return false;
}

bool cut_subseteq(const Cut& a, const Cut& b) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    bool a_free = a.is_free_tier(), b_free = b.is_free_tier();
    if (a_free != b_free) throw DomainError("cut comparison across tiers");
    if (a.kind == Cut::Kind::FixedThreshold) return a.k >= b.k;
    if (a.kind == Cut::Kind::PrincipalAbove && b.kind == Cut::Kind::PrincipalAbove)
        return eps_cmp(b.gamma, a.gamma) != EpsOrder::Greater; // b.gamma <= a.gamma eventually
    if (a.kind == Cut::Kind::PrincipalAbove && b.kind == Cut::Kind::DegreeAtLeast)
        return a.gamma.tail().degree() >= static_cast<int>(b.d);
    if (a.kind == Cut::Kind::DegreeAtLeast && b.kind == Cut::Kind::PrincipalAbove)
        return static_cast<int>(a.d) > b.gamma.tail().degree();
    return a.d >= b.d; // DegreeAtLeast vs DegreeAtLeast
}

Cut localizing_ideal(const AdmissibleTriple& tr) {
    require_valid(tr);
    Cut si = sharp(tr.i), sj = sharp(tr.j);
    return cut_subseteq(si, sj) ? sj : si;
}

std::string ShiftWitness::str() const {
    switch (direction) {
    case Direction::Identity: return "identity shift";
    case Direction::Direct:
        return "direct shift by multiplicity " +
               (free_amount.is_zero() && fixed_amount > 0 ? std::to_string(fixed_amount)
                                                          : free_amount.str());
    case Direction::Inverse:
        return "inverse shift by multiplicity " +
               (free_amount.is_zero() && fixed_amount > 0 ? std::to_string(fixed_amount)
                                                          : free_amount.str());
    }
    return {};
}

namespace {

ShiftWitness fixed_witness(long amount) {
    ShiftWitness w;
    if (amount == 0) return w;
    w.direction = amount > 0 ? ShiftWitness::Direction::Direct : ShiftWitness::Direction::Inverse;
    w.fixed_amount = static_cast<unsigned>(amount > 0 ? amount : -amount);
    w.free_amount = IntPoly(static_cast<long>(w.fixed_amount));
    return w;
}

ShiftWitness free_witness(const IntPoly& signed_amount) {
    ShiftWitness w;
    if (signed_amount.is_zero()) return w;
    bool direct = signed_amount.leading().sign() > 0;
    w.direction = direct ? ShiftWitness::Direction::Direct : ShiftWitness::Direction::Inverse;
    w.free_amount = direct ? signed_amount : -signed_amount;
    return w;
}

std::optional<ShiftWitness> shift_equivalent_fixed(const AdmissibleTriple& a,
                                                   const AdmissibleTriple& b) {
    if (!(a.u.t == b.u.t)) return std::nullopt; // different support point
    bool ai = !a.i.is_zero(), aj = !a.j.is_zero();
    bool bi = !b.i.is_zero(), bj = !b.j.is_zero();
    if (ai != bi || aj != bj) return std::nullopt; // zero cuts never match nonzero cuts
    if (ai && aj) {
        if (a.i.k + a.j.k != b.i.k + b.j.k) return std::nullopt;
        return fixed_witness(static_cast<long>(a.i.k) - static_cast<long>(b.i.k));
    }
    if (ai) return fixed_witness(static_cast<long>(a.i.k) - static_cast<long>(b.i.k));
    return fixed_witness(static_cast<long>(b.j.k) - static_cast<long>(a.j.k));
}

std::optional<ShiftWitness> shift_equivalent_free(const AdmissibleTriple& a,
                                                  const AdmissibleTriple& b) {
    if (a.i.kind != b.i.kind || a.j.kind != b.j.kind) return std::nullopt;
    // Degree cuts are invariant under every admissible shift.
    if (a.i.kind == Cut::Kind::DegreeAtLeast && a.i.d != b.i.d) return std::nullopt;
    if (a.j.kind == Cut::Kind::DegreeAtLeast && a.j.d != b.j.d) return std::nullopt;

    const bool i_pa = a.i.kind == Cut::Kind::PrincipalAbove;
    const bool j_pa = a.j.kind == Cut::Kind::PrincipalAbove;
    if (i_pa && j_pa) {
        // The shift moves multiplicity from the annihilator cut to the
        // divisibility cut, so gamma + delta is the class invariant.
        IntPoly lhs = a.i.gamma.tail() + a.j.gamma.tail();
        IntPoly rhs = b.i.gamma.tail() + b.j.gamma.tail();
        if (!(lhs == rhs)) return std::nullopt;
        return free_witness(a.i.gamma.tail() - b.i.gamma.tail());
    }
    if (i_pa) {
        // J side is zero or a degree cut; the shift degree is capped below
        // the J degree when J is a degree cut.
        IntPoly sigma = a.i.gamma.tail() - b.i.gamma.tail();
        if (a.j.kind == Cut::Kind::DegreeAtLeast &&
            sigma.degree() >= static_cast<int>(a.j.d))
            return std::nullopt;
        return free_witness(sigma);
    }
    if (j_pa) {
        IntPoly sigma = b.j.gamma.tail() - a.j.gamma.tail();
        if (a.i.kind == Cut::Kind::DegreeAtLeast &&
            sigma.degree() >= static_cast<int>(a.i.d))
            return std::nullopt;
        return free_witness(sigma);
    }
    return ShiftWitness{}; // only degree or zero cuts on both sides: identity
}

} // namespace

std::optional<ShiftWitness> shift_equivalent(const AdmissibleTriple& a,
                                             const AdmissibleTriple& b) {
    require_valid(a);
    require_valid(b);
    if (a.u.kind != b.u.kind) return std::nullopt;
    switch (a.u.kind) {
    case UltrafilterSpec::Kind::Empty: return ShiftWitness{};
    case UltrafilterSpec::Kind::Fixed: return shift_equivalent_fixed(a, b);
    case UltrafilterSpec::Kind::FreeTail: {
        bool ai = !a.i.is_zero(), aj = !a.j.is_zero();
        bool bi = !b.i.is_zero(), bj = !b.j.is_zero();
        if (ai != bi || aj != bj) return std::nullopt;
        return shift_equivalent_free(a, b);
    }
    }
    return std::nullopt;
}

namespace {

// Keep only the terms of degree >= d; the dropped part is a feasible shift.
IntPoly truncate_below_degree(const IntPoly& p, unsigned d) {
    std::vector<BigInt> coeffs;
    for (int i = static_cast<int>(d); i <= p.degree(); ++i) {
        coeffs.resize(static_cast<size_t>(i) + 1, BigInt(0));
        coeffs[static_cast<size_t>(i)] = p.coeff(static_cast<size_t>(i));
    }
    return IntPoly(std::move(coeffs));
}

} // namespace

AdmissibleTriple canonical_triple(const AdmissibleTriple& tr) {
    require_valid(tr);
    AdmissibleTriple out = tr;
    if (tr.u.kind == UltrafilterSpec::Kind::Empty) return out;
    if (tr.u.kind == UltrafilterSpec::Kind::Fixed) {
        bool i = !tr.i.is_zero(), j = !tr.j.is_zero();
        if (i && j) {
            out.i = Cut::fixed_threshold(tr.i.k + tr.j.k - 1);
            out.j = Cut::fixed_threshold(1);
        } else if (i) {
            out.i = Cut::fixed_threshold(1);
        } else {
            out.j = Cut::fixed_threshold(1);
        }
        return out;
    }
    const bool i_pa = tr.i.kind == Cut::Kind::PrincipalAbove;
    const bool j_pa = tr.j.kind == Cut::Kind::PrincipalAbove;
    if (i_pa && j_pa) {
        IntPoly total = tr.i.gamma.tail() + tr.j.gamma.tail() - IntPoly(1);
        out.i = Cut::principal_above(EPSeq::make(total));
        out.j = Cut::principal_above(EPSeq::constant(1));
    } else if (i_pa) {
        if (tr.j.kind == Cut::Kind::DegreeAtLeast) {
            IntPoly hi = truncate_below_degree(tr.i.gamma.tail(), tr.j.d);
            out.i = Cut::principal_above(hi.is_zero() ? EPSeq::constant(1) : EPSeq::make(hi));
        } else {
            out.i = Cut::principal_above(EPSeq::constant(1));
        }
    } else if (j_pa) {
        if (tr.i.kind == Cut::Kind::DegreeAtLeast) {
            IntPoly hi = truncate_below_degree(tr.j.gamma.tail(), tr.i.d);
            out.j = Cut::principal_above(hi.is_zero() ? EPSeq::constant(1) : EPSeq::make(hi));
        } else {
            out.j = Cut::principal_above(EPSeq::constant(1));
        }
    }
    return out;
}

std::string PointClass::label() const {
    switch (kind) {
    case Kind::IsolatedFiniteLength: return "isolated-finite-length";
    case Kind::FreeFiniteEndolength: return "free-finite-endolength";
    case Kind::Generic: return "generic";
    case Kind::QPoint: return "q";
    case Kind::Other: return "other";
    }
    return {};
}

Classification classify(const AdmissibleTriple& tr) {
    require_valid(tr);
    Classification out;
    out.canonical = canonical_triple(tr);

    if (tr.u.kind == UltrafilterSpec::Kind::Empty) {
        out.cls.kind = PointClass::Kind::QPoint;
        out.closed = true;
        out.survives_cb = true;
        out.closed_in_derivative = true;
        out.note = "the field of meromorphic functions, the generic point at the zero ideal";
        return out;
    }

    if (tr.u.kind == UltrafilterSpec::Kind::Fixed) {
        if (!tr.i.is_zero() && !tr.j.is_zero()) {
            out.cls.kind = PointClass::Kind::IsolatedFiniteLength;
            out.cls.t = tr.u.t;
            out.cls.n = tr.i.k + tr.j.k - 1;
            out.isolated = true;
            out.closed = true;
            if (out.cls.n == 1)
                out.note = "E_t(1) coincides with the generic point Q(E/M_t)";
            return out;
        }
        // One cut zero over a fixed point: infinite length, not isolated,
        // not in the closed-point list, removed by the first derivative.
        out.cls.kind = PointClass::Kind::Other;
        return out;
    }

    out.survives_cb = true; // nonzero polynomials act invertibly on free points

    if (tr.i == tr.j && is_prime_cut(tr.i)) {
        out.cls.kind = PointClass::Kind::Generic;
        out.cls.prime = tr.i;
        out.closed = true;
        out.closed_in_derivative = true;
        out.note = "generic point Q(E/P) at P = " + tr.i.str();
        return out;
    }

    if (tr.i.kind == Cut::Kind::PrincipalAbove && tr.j.kind == Cut::Kind::PrincipalAbove &&
        tr.i.gamma.tail().is_constant() && tr.j.gamma.tail().is_constant()) {
        unsigned a = static_cast<unsigned>(tr.i.gamma.tail().coeff(0).to_long());
        unsigned b = static_cast<unsigned>(tr.j.gamma.tail().coeff(0).to_long());
        out.cls.kind = PointClass::Kind::FreeFiniteEndolength;
        out.cls.n = a + b - 1;
        out.closed = true; // k >= 2 here, k = 1 is the generic case above
        out.closed_in_derivative = false;
        out.note = "E_M(" + std::to_string(out.cls.n) +
                   ") over the free maximal ideal; closed in the full spectrum, not closed "
                   "after the derivative";
        return out;
    }

    out.cls.kind = PointClass::Kind::Other;
    return out;
}

AdmissibleTriple pp_type_of_element(const GaussRational& t, unsigned n, unsigned j) {
    if (n == 0) throw DomainError("finite length point needs n >= 1");
    if (j >= n) throw DomainError("element (z-t)^j is zero in E_t(n) when j >= n");
    return AdmissibleTriple{UltrafilterSpec::fixed(t), Cut::fixed_threshold(n - j),
                            Cut::fixed_threshold(j + 1)};
}

} // namespace zg
