#include "zg/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>

#include "zg/dsl.hpp"
#include "zg/errors.hpp"

namespace zg::cli {

namespace {

using Handler = std::function<void(const std::vector<std::string>&, const Options&, Transcript&,
                                   std::string&)>;

void need_args(const std::vector<std::string>& args, size_t n, const std::string& verb) {
    if (args.size() != n)
        throw ParseError(verb + " expects " + std::to_string(n) + " argument(s), got " +
                             std::to_string(args.size()),
                         0);
}

bool looks_like_divisor(const std::string& s) {
    return !s.empty() && s.front() == '{';
}

unsigned parse_unsigned(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size() || v > 1000000UL) throw std::invalid_argument(s);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw ParseError("expected a small natural number for " + what + ", got '" + s + "'", 0);
    }
}

bool looks_like_tail(const std::string& s) { return s.rfind("tail", 0) == 0; }

// ---- verb handlers -------------------------------------------------------

void verb_gcd(const std::vector<std::string>& a, const Options&, Transcript& t,
              std::string& human) {
    need_args(a, 2, "gcd");
    if (looks_like_divisor(a[0]) || looks_like_divisor(a[1])) {
        FiniteDivisor f = dsl::parse_divisor(a[0]), g = dsl::parse_divisor(a[1]);
        FiniteDivisor r = div_gcd(f, g);
        t.result = ojson{{"route", "divisor"}, {"gcd", json_of(r)}};
        human = r.str();
    } else {
        Poly f = dsl::parse_poly(a[0]), g = dsl::parse_poly(a[1]);
        Poly r = Poly::gcd(f, g);
        t.result = ojson{{"route", "polynomial"}, {"gcd", r.str()}};
        human = r.str();
    }
}

void verb_lcm(const std::vector<std::string>& a, const Options&, Transcript& t,
              std::string& human) {
    need_args(a, 2, "lcm");
    if (looks_like_divisor(a[0]) || looks_like_divisor(a[1])) {
        FiniteDivisor r = div_lcm(dsl::parse_divisor(a[0]), dsl::parse_divisor(a[1]));
        t.result = ojson{{"route", "divisor"}, {"lcm", json_of(r)}};
        human = r.str();
    } else {
        Poly r = Poly::lcm(dsl::parse_poly(a[0]), dsl::parse_poly(a[1]));
        t.result = ojson{{"route", "polynomial"}, {"lcm", r.str()}};
        human = r.str();
    }
}

void verb_divides(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 2, "divides");
    bool yes;
    if (looks_like_divisor(a[0]) || looks_like_divisor(a[1])) {
        yes = divides(dsl::parse_divisor(a[0]), dsl::parse_divisor(a[1]));
        t.result = ojson{{"route", "divisor"}, {"divides", yes}};
    } else {
        yes = Poly::divides(dsl::parse_poly(a[0]), dsl::parse_poly(a[1]));
        t.result = ojson{{"route", "polynomial"}, {"divides", yes}};
    }
    human = yes ? "true" : "false";
}

void verb_adequate(const std::vector<std::string>& a, const Options&, Transcript& t,
                   std::string& human) {
    need_args(a, 2, "adequate");
    FiniteDivisor f = dsl::parse_divisor(a[0]), g = dsl::parse_divisor(a[1]);
    auto [h, u] = adequate_split(f, g);
    bool contained = true;
    for (auto& [p, m] : u.support())
        if (g.multiplicity(p) == 0) contained = false;
    t.steps.push_back("reassembly h*u = f: " + std::string(div_mul(h, u) == f ? "ok" : "FAIL"));
    t.steps.push_back("gcd(h, g) is the unit class: " +
                      std::string(div_gcd(h, g).is_unit_class() ? "ok" : "FAIL"));
    t.steps.push_back("support(u) inside support(g): " + std::string(contained ? "ok" : "FAIL"));
    t.result = ojson{{"h", json_of(h)}, {"u", json_of(u)}};
    human = "h = " + h.str() + ", u = " + u.str();
}

void verb_bezout(const std::vector<std::string>& a, const Options&, Transcript& t,
                 std::string& human) {
    need_args(a, 2, "bezout");
    Poly f = dsl::parse_poly(a[0]), g = dsl::parse_poly(a[1]);
    auto [d, u, v] = Poly::xgcd(f, g);
    bool identity = f * u + g * v == d;
    if (!identity) throw DomainError("internal: bezout identity failed");
    t.steps.push_back("f*u + g*v = gcd holds exactly");
    t.result = ojson{{"gcd", d.str()}, {"u", u.str()}, {"v", v.str()}};
    human = "gcd = " + d.str() + ", u = " + u.str() + ", v = " + v.str();
}

void verb_split_coprime(const std::vector<std::string>& a, const Options&, Transcript& t,
                        std::string& human) {
    need_args(a, 1, "split-coprime");
    if (looks_like_tail(a[0])) {
        TailDivisor f{dsl::parse_epseq(a[0])};
        if (!f.infinite_support()) {
            t.result = ojson{{"splittable", false}, {"reason", "finite support"}};
            human = "not splittable (finite support)";
            return;
        }
        TailSplit s = split_coprime(f);
        t.result = ojson{{"splittable", true},
                         {"even_indices", json_of(s.even_part)},
                         {"odd_indices", json_of(s.odd_part)}};
        human = "even: " + s.even_part.str() + ", odd: " + s.odd_part.str();
        return;
    }
    FiniteDivisor f = dsl::parse_divisor(a[0]);
    auto s = split_coprime(f);
    if (!s) {
        t.result = ojson{{"splittable", false},
                         {"reason", f.is_unit_class() ? "unit class" : "one-point support"}};
        human = "not splittable";
        return;
    }
    t.result = ojson{{"splittable", true},
                     {"parts", ojson::array({json_of(s->first), json_of(s->second)})}};
    human = s->first.str() + " * " + s->second.str();
}

void verb_pp_normalize(const std::vector<std::string>& a, const Options&, Transcript& t,
                       std::string& human) {
    need_args(a, 1, "pp-normalize");
    PpFormula f = dsl::parse_formula(a[0]);
    Trace trace;
    SumNormalForm sum = to_sum_normal(f, &trace);
    ConjNormalForm conj = to_conj_normal(f, &trace);
    for (auto& line : trace) t.steps.push_back(line);
    t.result = ojson{{"input", f.str()}, {"sum", json_of(sum)}, {"conj", json_of(conj)}};
    human = "sum:  " + sum.str() + "\nconj: " + conj.str();
}

void verb_pp_eval(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 2, "pp-eval");
    PpFormula f = dsl::parse_formula(a[0]);
    ModulePoint n = dsl::parse_module_point(a[1]);
    SubgroupDesc s = eval(f, n);
    t.result = ojson{{"formula", f.str()}, {"point", n.str()}, {"subgroup", json_of(s)}};
    human = s.str();
}

std::vector<ModulePoint> default_family() {
    return standard_family({GaussRational(0), GaussRational(1), GaussRational(-1),
                            GaussRational::imaginary_unit(), GaussRational(2)},
                           6);
}

void verb_pp_leq(const std::vector<std::string>& a, const Options&, Transcript& t,
                 std::string& human) {
    if (a.size() < 2) throw ParseError("pp-leq expects two formulas", 0);
    PpFormula phi = dsl::parse_formula(a[0]);
    PpFormula psi = dsl::parse_formula(a[1]);
    std::vector<ModulePoint> family;
    if (a.size() > 2) {
        for (size_t i = 2; i < a.size(); ++i) family.push_back(dsl::parse_module_point(a[i]));
    } else {
        family = default_family();
    }
    bool leq = true;
    ojson counter;
    for (auto& n : family) {
        SubgroupDesc p = eval(phi, n), q = eval(psi, n);
        if (!subgroup_leq(p, q)) {
            leq = false;
            counter = ojson{{"point", n.str()}, {"phi", json_of(p)}, {"psi", json_of(q)}};
            break;
        }
    }
    t.result = ojson{{"leq", leq}, {"family_size", family.size()}};
    if (!leq) t.result["counterexample"] = counter;
    human = leq ? "true" : "false";
}

void verb_triple_validate(const std::vector<std::string>& a, const Options&, Transcript& t,
                          std::string& human) {
    need_args(a, 1, "triple-validate");
    TripleValidation v = validate_triple(dsl::parse_triple(a[0]));
    t.result = json_of(v);
    human = v.ok ? "ok, case " + std::to_string(v.matched_case) : "violation: " + v.detail;
}

void verb_triple_classify(const std::vector<std::string>& a, const Options&, Transcript& t,
                          std::string& human) {
    need_args(a, 1, "triple-classify");
    Classification c = classify(dsl::parse_triple(a[0]));
    t.result = json_of(c);
    human = c.cls.label() + " (isolated: " + (c.isolated ? "yes" : "no") +
            ", closed: " + (c.closed ? "yes" : "no") +
            ", survives CB: " + (c.survives_cb ? "yes" : "no") + ")";
}

void verb_triple_equiv(const std::vector<std::string>& a, const Options&, Transcript& t,
                       std::string& human) {
    need_args(a, 2, "triple-equiv");
    auto w = shift_equivalent(dsl::parse_triple(a[0]), dsl::parse_triple(a[1]));
    t.result = ojson{{"equivalent", w.has_value()}};
    if (w) t.result["witness"] = json_of(*w);
    human = w ? "true, " + w->str() : "false";
}

void verb_sharp(const std::vector<std::string>& a, const Options&, Transcript& t,
                std::string& human) {
    need_args(a, 1, "sharp");
    Cut c = dsl::parse_cut(a[0]);
    Cut s = sharp(c);
    std::string reason;
    is_weakly_prime(c, &reason);
    t.steps.push_back("weakly prime: " + reason);
    t.result = ojson{{"input", json_of(c)}, {"sharp", json_of(s)},
                     {"prime", is_prime_cut(s)}};
    human = s.str();
}

void verb_prime_cut(const std::vector<std::string>& a, const Options&, Transcript& t,
                    std::string& human) {
    need_args(a, 1, "prime-cut");
    Cut c = dsl::parse_cut(a[0]);
    bool prime = is_prime_cut(c);
    t.result = ojson{{"cut", json_of(c)}, {"prime", prime}};
    human = prime ? "true" : "false";
}

void verb_localize(const std::vector<std::string>& a, const Options&, Transcript& t,
                   std::string& human) {
    need_args(a, 1, "localize");
    Cut p = localizing_ideal(dsl::parse_triple(a[0]));
    t.result = ojson{{"localizing_ideal", json_of(p)}};
    human = p.str();
}

void verb_isolate(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 2, "isolate");
    GaussRational point = dsl::parse_gauss(a[0]);
    unsigned n = parse_unsigned(a[1], "the length");
    BasicOpenPair p = isolation_pair(point, n);
    ojson table = ojson::array();
    for (unsigned m = 1; m <= n + 2; ++m) {
        ModulePoint mp = ModulePoint::finite_length(point, m);
        table.push_back(ojson{{"point", mp.str()}, {"contained", contains_point(p, mp)}});
    }
    GaussRational other = point == GaussRational(0) ? GaussRational(1) : GaussRational(0);
    ModulePoint op = ModulePoint::finite_length(other, n);
    table.push_back(ojson{{"point", op.str()}, {"contained", contains_point(p, op)}});
    table.push_back(ojson{{"point", "Q"}, {"contained", contains_point(p, ModulePoint::q_field())}});
    ojson polys = ojson::array({p.a.as_poly().str(), p.b.as_poly().str(), p.c.as_poly().str(),
                                p.d.as_poly().str()});
    t.result = ojson{{"pair", json_of(p)}, {"scalars", polys}, {"verification", table}};
    human = p.str();
}

void verb_contains(const std::vector<std::string>& a, const Options&, Transcript& t,
                   std::string& human) {
    need_args(a, 2, "contains");
    BasicOpenPair p = dsl::parse_pair(a[0]);
    if (a[1].rfind("triple", 0) == 0) {
        TripleMembership m = contains_triple(p, dsl::parse_triple(a[1]));
        t.result = json_of(m);
        human = m.contained ? "true (shift " + m.shift.str() + ")" : "false";
    } else {
        ModulePoint n = dsl::parse_module_point(a[1]);
        bool c = contains_point(p, n);
        SubgroupDesc sp = eval(p.phi(), n), sq = eval(p.psi(), n);
        t.result = ojson{{"contained", c}, {"phi", json_of(sp)}, {"psi", json_of(sq)}};
        human = c ? "true" : "false";
    }
}

void verb_inhabit(const std::vector<std::string>& a, const Options& opts, Transcript& t,
                  std::string& human) {
    need_args(a, 1, "inhabit");
    BasicOpenPair p = dsl::parse_pair(a[0]);
    WitnessReport w = inhabit(p, InhabitOptions{opts.max_k, opts.seed});
    if (!w.replay(p)) throw DomainError("internal: witness replay failed");
    t.result = json_of(w);
    t.result["replayed"] = true;
    human = w.empty ? "empty (triviality certificate over the probed family)"
                    : "witness " + w.point.str() + ", element (z-t)^" + std::to_string(w.element);
}

void verb_cb_pair(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 1, "cb-pair");
    DerivativePair d = cb_derivative_pair(dsl::parse_pair(a[0]));
    t.result = json_of(d);
    human = d.simplified.str() + (d.empty_in_derivative ? "  [empty in the derivative space]"
                                                        : "  [still opens free points]");
}

void verb_dense_between(const std::vector<std::string>& a, const Options&, Transcript& t,
                        std::string& human) {
    need_args(a, 2, "dense-between");
    DenseChainWitness w = dense_chain_check(dsl::parse_epseq(a[0]), dsl::parse_epseq(a[1]));
    t.result = json_of(w);
    human = w.midpoint.str();
}

void verb_pp_type_of(const std::vector<std::string>& a, const Options&, Transcript& t,
                     std::string& human) {
    need_args(a, 3, "pp-type-of");
    GaussRational point = dsl::parse_gauss(a[0]);
    unsigned n = parse_unsigned(a[1], "the length");
    unsigned j = parse_unsigned(a[2], "the element index");
    AdmissibleTriple tr = pp_type_of_element(point, n, j);
    t.result = json_of(tr);
    human = tr.str();
}

// ---- REPL-only call-style operations -------------------------------------

void verb_mul(const std::vector<std::string>& a, const Options&, Transcript& t,
              std::string& human) {
    need_args(a, 2, "mul");
    if (looks_like_tail(a[0]) || looks_like_tail(a[1])) {
        EPSeq r = dsl::parse_epseq(a[0]) + dsl::parse_epseq(a[1]);
        t.result = ojson{{"route", "tail"}, {"product", json_of(r)}};
        human = r.str();
        return;
    }
    FiniteDivisor r = div_mul(dsl::parse_divisor(a[0]), dsl::parse_divisor(a[1]));
    t.result = ojson{{"route", "divisor"}, {"product", json_of(r)}};
    human = r.str();
}

void verb_mult_at(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 2, "mult-at");
    unsigned m = dsl::parse_poly(a[0]).multiplicity_at(dsl::parse_gauss(a[1]));
    t.result = ojson{{"multiplicity", m}};
    human = std::to_string(m);
}

void verb_eps_cmp(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 2, "eps-cmp");
    EPSeq x = dsl::parse_epseq(a[0]), y = dsl::parse_epseq(a[1]);
    EpsOrder o = eps_cmp(x, y);
    std::string name = o == EpsOrder::Less ? "less"
                       : o == EpsOrder::Greater ? "greater"
                                                : "equal-cofinite";
    t.result = ojson{{"order", name}};
    if (o == EpsOrder::Less) t.result["strict_from"] = strict_order_from(x, y);
    if (o == EpsOrder::Greater) t.result["strict_from"] = strict_order_from(y, x);
    human = name;
}

void verb_fin_equiv(const std::vector<std::string>& a, const Options&, Transcript& t,
                    std::string& human) {
    need_args(a, 2, "fin-equiv");
    bool e = fin_equiv(dsl::parse_epseq(a[0]), dsl::parse_epseq(a[1]));
    t.result = ojson{{"fin_equiv", e}};
    human = e ? "true" : "false";
}

void verb_to_poly(const std::vector<std::string>& a, const Options&, Transcript& t,
                  std::string& human) {
    need_args(a, 1, "to-poly");
    Poly p = to_poly(SplitScalar{GaussRational(1), dsl::parse_divisor(a[0])});
    t.result = ojson{{"poly", p.str()}};
    human = p.str();
}

void verb_superdecomposable(const std::vector<std::string>& a, const Options&, Transcript& t,
                            std::string& human) {
    need_args(a, 1, "superdecomposable");
    SuperdecomposabilityReport r =
        looks_like_tail(a[0])
            ? is_superdecomposable_candidate(TailDivisor{dsl::parse_epseq(a[0])})
            : is_superdecomposable_candidate(dsl::parse_divisor(a[0]));
    t.result = json_of(r);
    human = (r.candidate ? "true: " : "false: ") + r.reason;
}

void verb_from_poly(const std::vector<std::string>& a, const Options&, Transcript& t,
                    std::string& human) {
    if (a.empty()) throw ParseError("from-poly expects a polynomial and its roots", 0);
    Poly f = dsl::parse_poly(a[0]);
    std::vector<GaussRational> roots;
    for (size_t i = 1; i < a.size(); ++i) roots.push_back(dsl::parse_gauss(a[i]));
    SplitScalar s = from_poly(f, roots);
    if (!(to_poly(s) == f)) throw DomainError("internal: split round trip failed");
    t.result = json_of(s);
    human = s.str();
}

struct VerbEntry {
    Handler handler;
    bool repl_only = false;
};

const std::map<std::string, VerbEntry>& verbs() {
    static const std::map<std::string, VerbEntry> table = {
        {"gcd", {verb_gcd}},
        {"lcm", {verb_lcm}},
        {"divides", {verb_divides}},
        {"adequate", {verb_adequate}},
        {"bezout", {verb_bezout}},
        {"split-coprime", {verb_split_coprime}},
        {"pp-normalize", {verb_pp_normalize}},
        {"pp-eval", {verb_pp_eval}},
        {"pp-leq", {verb_pp_leq}},
        {"triple-validate", {verb_triple_validate}},
        {"triple-classify", {verb_triple_classify}},
        {"triple-equiv", {verb_triple_equiv}},
        {"sharp", {verb_sharp}},
        {"prime-cut", {verb_prime_cut}},
        {"localize", {verb_localize}},
        {"isolate", {verb_isolate}},
        {"contains", {verb_contains}},
        {"inhabit", {verb_inhabit}},
        {"cb-pair", {verb_cb_pair}},
        {"dense-between", {verb_dense_between}},
        {"pp-type-of", {verb_pp_type_of}},
        // call-style operations for the interactive session
        {"mul", {verb_mul, true}},
        {"mult-at", {verb_mult_at, true}},
        {"eps-cmp", {verb_eps_cmp, true}},
        {"fin-equiv", {verb_fin_equiv, true}},
        {"to-poly", {verb_to_poly, true}},
        {"from-poly", {verb_from_poly, true}},
        {"superdecomposable", {verb_superdecomposable, true}},
    };
    return table;
}

} // namespace

ojson Transcript::to_json() const {
    return ojson{{"command", command},
                 {"args", args},
                 {"options", ojson{{"json", opts.json}, {"seed", opts.seed}, {"max_k", opts.max_k}}},
                 {"steps", steps},
                 {"result", result},
                 {"status", status}};
}

std::vector<std::string> verb_table() {
    std::vector<std::string> out;
    for (auto& [name, entry] : verbs())
        if (!entry.repl_only) out.push_back(name);
    return out;
}

std::vector<std::string> repl_builtins() {
    std::vector<std::string> out;
    for (auto& [name, entry] : verbs())
        if (entry.repl_only) out.push_back(name);
    return out;
}

Transcript run_verb(const std::string& verb, const std::vector<std::string>& args,
                    const Options& opts, std::string& human) {
    auto it = verbs().find(verb);
    if (it == verbs().end()) throw ParseError("unknown verb '" + verb + "'", 0);
    Transcript t;
    t.command = verb;
    t.args = args;
    t.opts = opts;
    it->second.handler(args, opts, t, human);
    return t;
}

namespace {

struct ParsedArgs {
    Options opts;
    std::vector<std::string> positional;
    bool help = false;
};

ParsedArgs scan_args(const std::vector<std::string>& args) {
    ParsedArgs out;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto value = [&](const char* flag) -> std::string {
            if (i + 1 >= args.size()) throw ParseError(std::string(flag) + " needs a value", 0);
            return args[++i];
        };
        if (a == "--json")
            out.opts.json = true;
        else if (a == "--seed")
            out.opts.seed = parse_unsigned(value("--seed"), "--seed");
        else if (a == "--max-k")
            out.opts.max_k = parse_unsigned(value("--max-k"), "--max-k");
        else if (a == "--fixtures")
            out.opts.fixtures = value("--fixtures");
        else if (a == "--help" || a == "-h")
            out.help = true;
        else
            out.positional.push_back(a);
    }
    return out;
}

void print_usage(std::ostream& out) {
    out << "usage: zg [--json] [--seed N] [--max-k N] [--fixtures DIR] <verb> <args...>\n"
        << "       zg repl\n"
        << "verbs:";
    for (auto& v : verb_table()) out << " " << v;
    out << "\n";
}

// Split on top-level whitespace (depth 0 w.r.t. (){}[]).
std::vector<std::string> split_top_level(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : line) {
        if (c == '(' || c == '{' || c == '[') ++depth;
        if (c == ')' || c == '}' || c == ']') --depth;
        bool is_sep = sep == ' ' ? std::isspace(static_cast<unsigned char>(c)) != 0 : c == sep;
        if (depth == 0 && is_sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Replace bound names by their stored text; values that are expressions get
// parentheses so operator precedence survives the splice.
std::string substitute(const std::string& line, const std::map<std::string, std::string>& vars) {
    std::string out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            std::string word = line.substr(i, j - i);
            auto it = vars.find(word);
            if (it != vars.end()) {
                const std::string& v = it->second;
                bool atom = v.rfind("{", 0) == 0 || v.rfind("tail", 0) == 0 ||
                            v.rfind("triple", 0) == 0 || v.rfind("pair", 0) == 0 ||
                            v.rfind("div", 0) == 0 || v.rfind("ann", 0) == 0;
                out += atom ? v : "(" + v + ")";
            } else {
                out += word;
            }
            i = j;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

int execute_line(const std::string& raw, const Options& opts,
                 std::map<std::string, std::string>& vars, std::ostream& out, std::ostream& err);

int replay_fixture(const std::string& path, const Options& opts, std::ostream& out,
                   std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        std::ifstream alt(opts.fixtures + "/" + path);
        if (!alt) {
            err << "error: cannot open fixture '" << path << "'\n";
            return 1;
        }
        in = std::move(alt);
    }
    ojson fixture = ojson::parse(in, nullptr, true);
    Options run_opts = opts;
    if (fixture.contains("options")) {
        run_opts.seed = fixture["options"].value("seed", 0u);
        run_opts.max_k = fixture["options"].value("max_k", 0u);
    }
    std::string verb = fixture.at("command").get<std::string>();
    std::vector<std::string> args;
    for (auto& a : fixture.at("args")) args.push_back(a.get<std::string>());
    std::string human;
    Transcript t = run_verb(verb, args, run_opts, human);
    bool same_result = t.result.dump() == fixture.at("result").dump();
    bool same_status = t.status == fixture.value("status", "ok");
    if (same_result && same_status) {
        out << "OK " << path << "\n";
        return 0;
    }
    err << "MISMATCH " << path << "\n  expected: " << fixture.at("result").dump()
        << "\n  got:      " << t.result.dump() << "\n";
    return 1;
}

int execute_line(const std::string& raw, const Options& opts,
                 std::map<std::string, std::string>& vars, std::ostream& out, std::ostream& err) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') return 0;
    if (line.rfind(":replay", 0) == 0) return replay_fixture(trim(line.substr(7)), opts, out, err);
    if (line.rfind("let ", 0) == 0) {
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            err << "error: let needs '='\n";
            return 1;
        }
        std::string name = trim(line.substr(4, eq - 4));
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
            err << "error: bad binding name\n";
            return 1;
        }
        static const std::set<std::string> reserved = {
            "z",    "i",    "n",   "x",     "E",     "Q",     "div",  "ann",
            "tail", "pair", "let", "triple", "fixed", "free", "empty", "above",
            "deg"};
        if (reserved.count(name)) {
            err << "error: '" << name << "' is reserved\n";
            return 1;
        }
        vars[name] = substitute(trim(line.substr(eq + 1)), vars);
        return 0;
    }
    line = substitute(line, vars);

    // Call-style sugar: name(arg, arg) runs the verb 'name' on the comma
    // split arguments.
    std::vector<std::string> parts;
    size_t paren = line.find('(');
    std::string head = paren == std::string::npos ? "" : trim(line.substr(0, paren));
    std::string head_dashed = head;
    for (auto& ch : head_dashed)
        if (ch == '_') ch = '-';
    if (!head.empty() && line.back() == ')' && verbs().count(head_dashed) &&
        head != "pair" && head != "triple" && head != "tail" && head != "div" && head != "ann") {
        std::string inner = line.substr(paren + 1, line.size() - paren - 2);
        parts.push_back(head_dashed);
        for (auto& piece : split_top_level(inner, ',')) parts.push_back(trim(piece));
    } else {
        parts = split_top_level(line, ' ');
    }
    if (parts.empty()) return 0;
    std::string verb = parts[0];
    std::vector<std::string> args(parts.begin() + 1, parts.end());
    try {
        std::string human;
        Transcript t = run_verb(verb, args, opts, human);
        if (opts.json)
            out << t.to_json().dump(2) << "\n";
        else
            out << human << "\n";
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int repl(std::istream& in, std::ostream& out, std::ostream& err, Options opts) {
    std::map<std::string, std::string> vars;
    std::string line;
    out << "zg session; :replay FILE to verify a transcript, :quit to leave\n";
    while (true) {
        out << "> " << std::flush;
        if (!std::getline(in, line)) break;
        std::string t = trim(line);
        if (t == ":quit" || t == ":q" || t == "quit" || t == "exit") break;
        execute_line(line, opts, vars, out, err); // per-line status, session continues
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    ParsedArgs parsed;
    try {
        parsed = scan_args(args);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (parsed.help || parsed.positional.empty()) {
        print_usage(parsed.help ? out : err);
        return parsed.help ? 0 : 2;
    }
    std::string verb = parsed.positional[0];
    std::vector<std::string> rest(parsed.positional.begin() + 1, parsed.positional.end());
    if (verb == "repl") return repl(std::cin, out, err, parsed.opts);

    auto emit_error = [&](const std::string& status, const std::string& msg, int code) {
        if (parsed.opts.json) {
            Transcript t;
            t.command = verb;
            t.args = rest;
            t.opts = parsed.opts;
            t.status = status;
            ojson j = t.to_json();
            j["error"] = msg;
            out << j.dump(2) << "\n";
        }
        err << (code == 2 ? "parse error: " : "error: ") << msg << "\n";
        return code;
    };

    auto it_known = verbs().find(verb);
    if (it_known == verbs().end() || it_known->second.repl_only) {
        print_usage(err);
        return emit_error("parse-error", "unknown verb '" + verb + "'", 2);
    }
    try {
        std::string human;
        Transcript t = run_verb(verb, rest, parsed.opts, human);
        if (parsed.opts.json)
            out << t.to_json().dump(2) << "\n";
        else
            out << human << "\n";
        return 0;
    } catch (const ParseError& e) {
        return emit_error("parse-error", e.what(), 2);
    } catch (const DomainError& e) {
        return emit_error("domain-error", e.what(), 1);
    }
}

} // namespace zg::cli
