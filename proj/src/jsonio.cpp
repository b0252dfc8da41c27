#include "zg/jsonio.hpp"

namespace zg {

ojson json_of(const Poly& p) { return p.str(); }

ojson json_of(const FiniteDivisor& d) {
    ojson points = ojson::array();
    for (auto& [t, m] : d.support()) points.push_back({{"point", t.str()}, {"mult", m}});
    return ojson{{"text", d.str()}, {"points", points}};
}

ojson json_of(const SplitScalar& s) {
    return ojson{{"unit", s.unit.str()}, {"divisor", json_of(s.divisor)},
                 {"poly", to_poly(s).str()}};
}

ojson json_of(const EPSeq& s) {
    ojson exc = ojson::object();
    for (auto& [i, v] : s.exceptions()) exc[std::to_string(i)] = v;
    return ojson{{"text", s.str()},
                 {"tail", s.tail().str()},
                 {"threshold", s.threshold()},
                 {"exceptions", exc}};
}

ojson json_of(const Cut& c) {
    switch (c.kind) {
    case Cut::Kind::Zero: return ojson{{"kind", "zero"}, {"text", c.str()}};
    case Cut::Kind::FixedThreshold:
        return ojson{{"kind", "fixed-threshold"}, {"k", c.k}, {"text", c.str()}};
    case Cut::Kind::PrincipalAbove:
        return ojson{{"kind", "principal-above"}, {"generator", c.gamma.tail().str()},
                     {"text", c.str()}};
    case Cut::Kind::DegreeAtLeast:
        return ojson{{"kind", "degree-at-least"}, {"d", c.d}, {"text", c.str()}};
    }
    return {};
}

ojson json_of(const UltrafilterSpec& u) {
    switch (u.kind) {
    case UltrafilterSpec::Kind::Fixed:
        return ojson{{"kind", "fixed"}, {"point", u.t.str()}};
    case UltrafilterSpec::Kind::FreeTail: return ojson{{"kind", "free"}};
    case UltrafilterSpec::Kind::Empty: return ojson{{"kind", "empty"}};
    }
    return {};
}

ojson json_of(const AdmissibleTriple& tr) {
    return ojson{{"text", tr.str()},
                 {"ultrafilter", json_of(tr.u)},
                 {"i", json_of(tr.i)},
                 {"j", json_of(tr.j)}};
}

ojson json_of(const ModulePoint& n) { return n.str(); }

ojson json_of(const SubgroupDesc& s) {
    switch (s.kind) {
    case SubgroupDesc::Kind::Exponent:
        return ojson{{"kind", "exponent"}, {"exponent", s.exponent}};
    case SubgroupDesc::Kind::Full: return ojson{{"kind", "full"}};
    case SubgroupDesc::Kind::Zero: return ojson{{"kind", "zero"}};
    }
    return {};
}

namespace {
ojson pairs_json(const std::vector<NormalPair>& pairs) {
    ojson out = ojson::array();
    for (auto& p : pairs) out.push_back(ojson::array({p.first.str(), p.second.str()}));
    return out;
}
} // namespace

ojson json_of(const SumNormalForm& f) {
    return ojson{{"shape", "sum of (a|x & xb=0)"}, {"pairs", pairs_json(f.pairs)},
                 {"text", f.str()}};
}

ojson json_of(const ConjNormalForm& f) {
    return ojson{{"shape", "conjunction of (c|x + xd=0)"}, {"pairs", pairs_json(f.pairs)},
                 {"text", f.str()}};
}

ojson json_of(const TripleValidation& v) {
    return ojson{{"ok", v.ok}, {"case", v.matched_case}, {"detail", v.detail}};
}

ojson json_of(const ShiftWitness& w) {
    std::string dir = w.direction == ShiftWitness::Direction::Identity ? "identity"
                      : w.direction == ShiftWitness::Direction::Direct ? "direct"
                                                                       : "inverse";
    return ojson{{"direction", dir},
                 {"multiplicity", w.free_amount.is_zero() && w.fixed_amount > 0
                                      ? std::to_string(w.fixed_amount)
                                      : w.free_amount.str()},
                 {"text", w.str()}};
}

ojson json_of(const Classification& c) {
    ojson out{{"class", c.cls.label()},
              {"isolated", c.isolated},
              {"closed", c.closed},
              {"survives_cb", c.survives_cb},
              {"closed_in_derivative", c.closed_in_derivative}};
    switch (c.cls.kind) {
    case PointClass::Kind::IsolatedFiniteLength:
        out["point"] = "E_" + c.cls.t.str() + "(" + std::to_string(c.cls.n) + ")";
        break;
    case PointClass::Kind::FreeFiniteEndolength:
        out["point"] = "E_M(" + std::to_string(c.cls.n) + ")";
        break;
    case PointClass::Kind::Generic:
        out["point"] = "Q(E/P), P = " + c.cls.prime.str();
        break;
    case PointClass::Kind::QPoint: out["point"] = "Q"; break;
    case PointClass::Kind::Other: break;
    }
    out["canonical"] = c.canonical.str();
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

ojson json_of(const PairScalar& s) { return s.str(); }

ojson json_of(const BasicOpenPair& p) {
    return ojson{{"text", p.str()},
                 {"a", json_of(p.a)},
                 {"b", json_of(p.b)},
                 {"c", json_of(p.c)},
                 {"d", json_of(p.d)},
                 {"tier", p.tail_tier() ? "tail" : "exact"}};
}

ojson json_of(const TripleMembership& m) {
    ojson out{{"contained", m.contained}};
    if (m.contained) out["shift"] = m.shift.str();
    out["transcript"] = m.transcript;
    return out;
}

ojson json_of(const WitnessReport& w) {
    if (w.empty) {
        ojson family = ojson::array();
        for (auto& n : w.certificate_family) family.push_back(n.str());
        return ojson{{"empty", true},
                     {"certificate_family", family},
                     {"transcript", w.transcript}};
    }
    ojson out{{"empty", false},
              {"point", w.point.str()},
              {"element", w.element},
              {"phi_exponent", w.phi_exponent},
              {"psi_exponent", w.psi_exponent}};
    if (w.tail_index) out["support_index"] = *w.tail_index;
    out["transcript"] = w.transcript;
    return out;
}

ojson json_of(const DerivativePair& d) {
    return ojson{{"pair", json_of(d.simplified)},
                 {"empty_in_derivative", d.empty_in_derivative},
                 {"note", d.note}};
}

ojson json_of(const SuperdecomposabilityReport& r) {
    ojson out{{"candidate", r.candidate}, {"reason", r.reason}};
    if (r.finite_split)
        out["split"] = ojson::array({r.finite_split->first.str(), r.finite_split->second.str()});
    if (r.tail_split)
        out["split"] = ojson{{"even_indices", r.tail_split->even_part.str()},
                             {"odd_indices", r.tail_split->odd_part.str()}};
    if (r.blocking_divisor) out["blocking_divisor"] = r.blocking_divisor->str();
    return out;
}

ojson json_of(const DenseChainWitness& w) {
    return ojson{{"midpoint", json_of(w.midpoint)},
                 {"left_strict_from", w.left_strict_from},
                 {"right_strict_from", w.right_strict_from},
                 {"transcript", w.transcript}};
}

} // namespace zg
