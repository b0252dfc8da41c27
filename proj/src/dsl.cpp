#include "zg/dsl.hpp"

#include <cctype>
#include <vector>

#include "zg/errors.hpp"

namespace zg::dsl {

namespace {

struct Token {
    enum class Kind { Int, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }
    Token next() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at_end() const { return cur_.kind == Token::Kind::End; }

    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError(msg, cur_.pos);
    }

    bool accept_symbol(const std::string& s) {
        if (cur_.kind == Token::Kind::Symbol && cur_.text == s) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_ident(const std::string& s) {
        if (cur_.kind == Token::Kind::Ident && cur_.text == s) {
            advance();
            return true;
        }
        return false;
    }
    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s)) error("expected '" + s + "'");
    }
    unsigned long expect_nat() {
        if (cur_.kind != Token::Kind::Int) error("expected a number");
        unsigned long v = 0;
        try {
            v = std::stoul(cur_.text);
        } catch (const std::exception&) {
            error("number out of range");
        }
        advance();
        return v;
    }
    std::string expect_ident() {
        if (cur_.kind != Token::Kind::Ident) error("expected an identifier");
        return next().text;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        cur_.pos = i_;
        if (i_ >= src_.size()) {
            cur_ = {Token::Kind::End, "", i_};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            cur_ = {Token::Kind::Int, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            cur_ = {Token::Kind::Ident, src_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        static const std::string symbols = "+-*^/(){}[]:;,=&";
        if (symbols.find(c) != std::string::npos) {
            cur_ = {Token::Kind::Symbol, std::string(1, c), i_};
            ++i_;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }

    const std::string& src_;
    size_t i_ = 0;
    Token cur_;
};

// Polynomial expressions share one grammar; the variable name selects the
// tier (z over Q(i), n over Z, or none for constants).
class PolyParser {
public:
    PolyParser(Lexer& lex, std::string var) : lex_(lex), var_(std::move(var)) {}

    Poly expr() {
        bool neg = lex_.accept_symbol("-");
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (lex_.accept_symbol("+"))
                acc = acc + term();
            else if (lex_.accept_symbol("-"))
                acc = acc - term();
            else
                return acc;
        }
    }

private:
    Poly term() {
        Poly acc = factor();
        while (lex_.accept_symbol("*")) acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        while (lex_.accept_symbol("^")) {
            unsigned long e = lex_.expect_nat();
            if (e > 4096) lex_.error("exponent too large");
            base = base.pow(e);
        }
        return base;
    }

    Poly primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            BigInt num(lex_.next().text);
            Rational r{num};
            if (lex_.accept_symbol("/")) {
                if (lex_.peek().kind != Token::Kind::Int) lex_.error("expected a denominator");
                BigInt den(lex_.next().text);
                r = Rational(num, den);
            }
            if (lex_.accept_ident("i")) return Poly::constant({Rational(0), r});
            return Poly::constant({r});
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "i" && var_ != "n") {
                lex_.next();
                return Poly::constant(GaussRational::imaginary_unit());
            }
            if (!var_.empty() && t.text == var_) {
                lex_.next();
                return Poly::var();
            }
            lex_.error(var_.empty() ? "expected a constant expression"
                                    : "expected the variable '" + var_ + "'");
        }
        if (lex_.accept_symbol("(")) {
            Poly inner = expr();
            lex_.expect_symbol(")");
            return inner;
        }
        lex_.error("expected a number, variable or parenthesized expression");
    }

    Lexer& lex_;
    std::string var_;
};

void expect_end(Lexer& lex) {
    if (!lex.at_end()) lex.error("trailing input");
}

Poly poly_expr(Lexer& lex) { return PolyParser(lex, "z").expr(); }

IntPoly int_poly_expr(Lexer& lex) {
    Poly p = PolyParser(lex, "n").expr();
    std::vector<BigInt> coeffs;
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        const GaussRational& c = p.coeffs()[i];
        if (!c.is_real() || !c.re.is_integer())
            throw ParseError("integer coefficients required here", 0);
        coeffs.push_back(c.re.num());
    }
    return IntPoly(std::move(coeffs));
}

GaussRational gauss_expr(Lexer& lex) {
    Poly p = PolyParser(lex, "").expr();
    if (p.degree() > 0) throw ParseError("expected a constant", 0);
    return p.is_zero() ? GaussRational(0) : p.coeff(0);
}

FiniteDivisor divisor_literal(Lexer& lex) {
    lex.expect_symbol("{");
    FiniteDivisor::Support support;
    if (!lex.accept_symbol("}")) {
        while (true) {
            GaussRational point = gauss_expr(lex);
            lex.expect_symbol(":");
            unsigned long m = lex.expect_nat();
            if (m == 0) throw ParseError("divisor multiplicities must be >= 1", lex.peek().pos);
            auto [it, inserted] = support.emplace(point, m);
            if (!inserted) throw ParseError("repeated divisor point", lex.peek().pos);
            if (lex.accept_symbol("}")) break;
            lex.expect_symbol(",");
        }
    }
    return FiniteDivisor(std::move(support));
}

EPSeq epseq_literal(Lexer& lex) {
    if (!lex.accept_ident("tail")) {
        // Bare integer polynomial shorthand.
        return EPSeq::make(int_poly_expr(lex));
    }
    lex.expect_symbol("(");
    IntPoly tail = int_poly_expr(lex);
    std::map<unsigned long, unsigned long> exceptions;
    if (lex.accept_symbol(";")) {
        while (true) {
            unsigned long idx = lex.expect_nat();
            lex.expect_symbol(":");
            unsigned long val = lex.expect_nat();
            exceptions.emplace(idx, val);
            if (!lex.accept_symbol(",")) break;
        }
    }
    lex.expect_symbol(")");
    return EPSeq::make(std::move(tail), std::move(exceptions));
}

PpFormula formula_expr(Lexer& lex);

PpFormula matrix_form(Lexer& lex) {
    // E y1 .. yk : [y1 .. yk]*[[..],..] = x*[..]
    std::vector<std::string> names;
    while (lex.peek().kind == Token::Kind::Ident) names.push_back(lex.expect_ident());
    if (names.empty()) lex.error("matrix form needs at least one bound variable");
    lex.expect_symbol(":");
    lex.expect_symbol("[");
    for (size_t i = 0; i < names.size(); ++i) {
        std::string n = lex.expect_ident();
        if (n != names[i]) lex.error("bound variable list mismatch: '" + n + "'");
    }
    lex.expect_symbol("]");
    lex.expect_symbol("*");
    lex.expect_symbol("[");
    std::vector<std::vector<Poly>> rows;
    while (true) {
        lex.expect_symbol("[");
        std::vector<Poly> row;
        while (true) {
            row.push_back(poly_expr(lex));
            if (!lex.accept_symbol(",")) break;
        }
        lex.expect_symbol("]");
        rows.push_back(std::move(row));
        if (!lex.accept_symbol(",")) break;
    }
    lex.expect_symbol("]");
    lex.expect_symbol("=");
    if (!lex.accept_ident("x")) lex.error("expected 'x' on the right-hand side");
    lex.expect_symbol("*");
    lex.expect_symbol("[");
    std::vector<Poly> rhs;
    while (true) {
        rhs.push_back(poly_expr(lex));
        if (!lex.accept_symbol(",")) break;
    }
    lex.expect_symbol("]");

    if (rows.size() != names.size()) lex.error("matrix row count must match the bound variables");
    size_t cols = rows[0].size();
    std::vector<Poly> entries;
    for (auto& r : rows) {
        if (r.size() != cols) lex.error("ragged matrix rows");
        for (auto& e : r) entries.push_back(std::move(e));
    }
    if (rhs.size() != cols) lex.error("row vector length must match the matrix columns");
    return PpFormula::matrix_form(names.size(), cols, std::move(entries), std::move(rhs));
}

PpFormula formula_atom(Lexer& lex) {
    if (lex.accept_ident("div")) {
        lex.expect_symbol("(");
        Poly p = poly_expr(lex);
        lex.expect_symbol(")");
        return PpFormula::divides(std::move(p));
    }
    if (lex.accept_ident("ann")) {
        lex.expect_symbol("(");
        Poly p = poly_expr(lex);
        lex.expect_symbol(")");
        return PpFormula::ann(std::move(p));
    }
    if (lex.accept_ident("E")) return matrix_form(lex);
    if (lex.accept_symbol("(")) {
        PpFormula f = formula_expr(lex);
        lex.expect_symbol(")");
        return f;
    }
    lex.error("expected div(...), ann(...), a matrix form or a parenthesized formula");
}

PpFormula formula_conj(Lexer& lex) {
    PpFormula acc = formula_atom(lex);
    while (lex.accept_symbol("&")) acc = PpFormula::conj(std::move(acc), formula_atom(lex));
    return acc;
}

PpFormula formula_expr(Lexer& lex) {
    PpFormula acc = formula_conj(lex);
    while (lex.accept_symbol("+")) acc = PpFormula::sum(std::move(acc), formula_conj(lex));
    return acc;
}

Cut cut_expr(Lexer& lex, bool free_tier) {
    if (lex.peek().kind == Token::Kind::Int) {
        unsigned long k = lex.expect_nat();
        if (k == 0) return Cut::zero();
        if (free_tier) return Cut::principal_above(EPSeq::constant(k));
        return Cut::fixed_threshold(static_cast<unsigned>(k));
    }
    if (lex.accept_ident("above")) {
        lex.expect_symbol("(");
        EPSeq g = epseq_literal(lex);
        lex.expect_symbol(")");
        return Cut::principal_above(std::move(g));
    }
    if (lex.accept_ident("deg")) {
        lex.expect_symbol("(");
        unsigned long d = lex.expect_nat();
        lex.expect_symbol(")");
        return Cut::degree_at_least(static_cast<unsigned>(d));
    }
    lex.error("expected a cut: 0, a threshold, above(...) or deg(...)");
}

AdmissibleTriple triple_expr(Lexer& lex) {
    if (!lex.accept_ident("triple")) lex.error("expected triple(...)");
    lex.expect_symbol("(");
    UltrafilterSpec u;
    bool free_tier = false;
    if (lex.accept_ident("fixed")) {
        lex.expect_symbol("(");
        u = UltrafilterSpec::fixed(gauss_expr(lex));
        lex.expect_symbol(")");
    } else if (lex.accept_ident("free")) {
        u = UltrafilterSpec::free_tail();
        free_tier = true;
    } else if (lex.accept_ident("empty")) {
        u = UltrafilterSpec::empty();
    } else {
        lex.error("expected fixed(t), free or empty");
    }
    lex.expect_symbol(",");
    Cut i = cut_expr(lex, free_tier);
    lex.expect_symbol(",");
    Cut j = cut_expr(lex, free_tier);
    lex.expect_symbol(")");
    return AdmissibleTriple{std::move(u), std::move(i), std::move(j)};
}

ModulePoint module_point_expr(Lexer& lex) {
    if (lex.accept_ident("Q")) return ModulePoint::q_field();
    if (lex.accept_ident("E")) {
        lex.expect_symbol("(");
        GaussRational t = gauss_expr(lex);
        lex.expect_symbol(",");
        unsigned long k = lex.expect_nat();
        lex.expect_symbol(")");
        return ModulePoint::finite_length(std::move(t), static_cast<unsigned>(k));
    }
    lex.error("expected a point E(t,k) or Q");
}

PairScalar pair_scalar(Lexer& lex) {
    const Token& t = lex.peek();
    if (t.kind == Token::Kind::Ident && t.text == "tail")
        return PairScalar::symbolic(TailDivisor{epseq_literal(lex)});
    if (t.kind == Token::Kind::Symbol && t.text == "{")
        return PairScalar::exact_split(SplitScalar{GaussRational(1), divisor_literal(lex)});
    return PairScalar::exact(poly_expr(lex));
}

BasicOpenPair pair_expr(Lexer& lex) {
    if (!lex.accept_ident("pair")) lex.error("expected pair(...)");
    lex.expect_symbol("(");
    BasicOpenPair p;
    p.a = pair_scalar(lex);
    lex.expect_symbol(";");
    p.b = pair_scalar(lex);
    lex.expect_symbol(";");
    p.c = pair_scalar(lex);
    lex.expect_symbol(";");
    p.d = pair_scalar(lex);
    lex.expect_symbol(")");
    p.require_consistent();
    return p;
}

template <typename F> auto run(const std::string& text, F&& f) {
    Lexer lex(text);
    auto out = f(lex);
    expect_end(lex);
    return out;
}

} // namespace

Poly parse_poly(const std::string& text) { return run(text, poly_expr); }
IntPoly parse_int_poly(const std::string& text) { return run(text, int_poly_expr); }
GaussRational parse_gauss(const std::string& text) { return run(text, gauss_expr); }
FiniteDivisor parse_divisor(const std::string& text) { return run(text, divisor_literal); }
EPSeq parse_epseq(const std::string& text) { return run(text, epseq_literal); }
PpFormula parse_formula(const std::string& text) { return run(text, formula_expr); }
ModulePoint parse_module_point(const std::string& text) { return run(text, module_point_expr); }
Cut parse_cut(const std::string& text, bool free_tier) {
    return run(text, [&](Lexer& lex) { return cut_expr(lex, free_tier); });
}
AdmissibleTriple parse_triple(const std::string& text) { return run(text, triple_expr); }
BasicOpenPair parse_pair(const std::string& text) { return run(text, pair_expr); }

} // namespace zg::dsl
