#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "zg/dsl.hpp"
#include "zg/semantics.hpp"

using namespace zg;
using zgtest::Rng;

namespace {

Poly P(const std::string& s) { return dsl::parse_poly(s); }
PpFormula F(const std::string& s) { return dsl::parse_formula(s); }
ModulePoint Et(const std::string& t, unsigned k) {
    return ModulePoint::finite_length(dsl::parse_gauss(t), k);
}

std::vector<ModulePoint> family6() {
    return standard_family({dsl::parse_gauss("0"), dsl::parse_gauss("1"), dsl::parse_gauss("-1"),
                            dsl::parse_gauss("i"), dsl::parse_gauss("2")},
                           6);
}

} // namespace

TEST_CASE("eval on finite length points and on Q: frozen examples") {
    CHECK(eval(F("div(z^2)"), Et("0", 3)) == SubgroupDesc::exp(2));
    CHECK(eval(F("ann(z^2)"), Et("0", 3)) == SubgroupDesc::exp(1));
    CHECK(eval(F("div(z-5)"), ModulePoint::q_field()) == SubgroupDesc::full());
    CHECK(eval(F("ann(z-5)"), ModulePoint::q_field()) == SubgroupDesc::zero());
    CHECK(eval(F("div(0)"), Et("0", 3)) == SubgroupDesc::exp(3)); // x = 0
    CHECK(eval(F("ann(0)"), Et("0", 3)) == SubgroupDesc::exp(0)); // x = x
    // chain semantics: & is max, + is min
    CHECK(eval(F("div(z^2) & ann(z^2)"), Et("0", 3)) == SubgroupDesc::exp(2));
    CHECK(eval(F("div(z^2) + ann(z^2)"), Et("0", 3)) == SubgroupDesc::exp(1));
}

TEST_CASE("normal forms of basic formulas: frozen examples") {
    SumNormalForm s1 = to_sum_normal(F("div((z-1)^2)"));
    REQUIRE(s1.pairs.size() == 1);
    CHECK(s1.pairs[0].first == P("(z-1)^2"));
    CHECK(s1.pairs[0].second.is_zero());

    // Trivial formula collapses to the canonical trivial atom.
    SumNormalForm s2 = to_sum_normal(F("div(1) & ann(0)"));
    REQUIRE(s2.pairs.size() == 1);
    CHECK(s2.pairs[0].first == Poly::one());
    CHECK(s2.pairs[0].second.is_zero());

    // div(0) is x = 0.
    SumNormalForm s3 = to_sum_normal(F("div(0)"));
    REQUIRE(s3.pairs.size() == 1);
    CHECK(s3.pairs[0].first.is_zero());

    ConjNormalForm c1 = to_conj_normal(F("ann(z-1)"));
    REQUIRE(c1.pairs.size() == 1);
    CHECK(c1.pairs[0].first.is_zero());
    CHECK(c1.pairs[0].second == P("z-1"));
}

TEST_CASE("zero-set reduction: annihilator dominates the divides scalar") {
    // In (a|x & xb=0) only the part of a over the zeros of b matters.
    PpFormula f = F("div((z-1)*(z-2)) & ann((z-1)^3)");
    SumNormalForm s = to_sum_normal(f);
    REQUIRE(s.pairs.size() == 1);
    CHECK(s.pairs[0].first == P("z-1"));
    CHECK(s.pairs[0].second == P("(z-1)^3"));
    for (auto& n : family6()) CHECK(eval(f, n) == eval(s, n));
}

TEST_CASE("matrix form reduces to the spec shape: y*z^2 = x*z") {
    PpFormula f = F("E y1 : [y1]*[[z^2]] = x*[z]");
    PpFormula expect = F("div(z) + ann(z)");
    for (auto& n : family6()) CHECK(eval(f, n) == eval(expect, n));
    // At the support point the exponent follows the min(1, k-1) pattern.
    for (unsigned k = 1; k <= 6; ++k)
        CHECK(eval(f, Et("0", k)) == SubgroupDesc::exp(std::min(1u, k - 1)));
    CHECK(eval(f, ModulePoint::q_field()) == SubgroupDesc::full());
}

TEST_CASE("lattice_leq on the standard family: frozen examples") {
    auto fam = family6();
    CHECK(lattice_leq(F("ann(z)"), F("ann(z^2)"), fam));
    CHECK_FALSE(lattice_leq(F("div(z)"), F("div(z^2)"), fam));
    PpFormula f = F("E y1 y2 : [y1 y2]*[[z,0],[1,z]] = x*[1, z]");
    CHECK(lattice_leq(f, formula_of(to_sum_normal(f)), fam));
    CHECK(lattice_leq(formula_of(to_sum_normal(f)), f, fam));
}

TEST_CASE("matrix lattice oracle agrees with hand-computed small cases") {
    // exists y: y*z = x on E_0(2) is the subgroup z*E_0(2).
    PpFormula f = F("E y1 : [y1]*[[z]] = x*[1]");
    CHECK(zgoracle::eval_matrix_oracle(f, Et("0", 2)) == SubgroupDesc::exp(1));
    CHECK(zgoracle::eval_matrix_oracle(f, Et("1", 2)) == SubgroupDesc::exp(0));
    CHECK(zgoracle::eval_matrix_oracle(f, ModulePoint::q_field()) == SubgroupDesc::full());
    // 0 = x*z is the annihilator of z.
    PpFormula g = F("E y1 : [y1]*[[0]] = x*[z]");
    CHECK(zgoracle::eval_matrix_oracle(g, Et("0", 3)) == SubgroupDesc::exp(2));
    CHECK(zgoracle::eval_matrix_oracle(g, ModulePoint::q_field()) == SubgroupDesc::zero());
}

TEST_CASE("property: normalization soundness against the direct oracle") {
    Rng rng(41);
    auto fam = family6();
    for (int it = 0; it < 60; ++it) {
        PpFormula f = zgtest::random_matrix_form(rng, 3, 3);
        SumNormalForm sum = to_sum_normal(f);
        ConjNormalForm conj = to_conj_normal(f);
        for (auto& n : fam) {
            SubgroupDesc direct = zgoracle::eval_oracle(f, n);
            CHECK(eval(f, n) == direct);
            CHECK(eval(sum, n) == direct);
            CHECK(eval(conj, n) == direct);
        }
    }
}

TEST_CASE("property: composite formulas evaluate like their normal forms") {
    Rng rng(42);
    auto fam = family6();
    for (int it = 0; it < 60; ++it) {
        PpFormula f = PpFormula::sum(
            PpFormula::conj(PpFormula::divides(zgtest::random_poly(rng, 3, true)),
                            PpFormula::ann(zgtest::random_poly(rng, 3, true))),
            PpFormula::conj(zgtest::random_matrix_form(rng, 2, 2),
                            PpFormula::ann(zgtest::random_poly(rng, 2, true))));
        SumNormalForm sum = to_sum_normal(f);
        ConjNormalForm conj = to_conj_normal(f);
        for (auto& n : fam) {
            SubgroupDesc v = zgoracle::eval_oracle(f, n);
            CHECK(eval(sum, n) == v);
            CHECK(eval(conj, n) == v);
        }
    }
}

TEST_CASE("normal form invariants: exponents stay in range, shapes respected") {
    Rng rng(43);
    for (int it = 0; it < 40; ++it) {
        PpFormula f = zgtest::random_matrix_form(rng, 3, 2);
        SumNormalForm sum = to_sum_normal(f);
        for (auto& p : sum.pairs) {
            // Sum-form reduction invariant: roots of a lie under roots of b.
            if (!p.second.is_zero() && !p.second.is_unit() && !p.first.is_zero()) {
                auto [coprime, shared] = p.first.saturate_against(p.second);
                CHECK(coprime.is_constant());
            }
        }
        for (unsigned k = 1; k <= 4; ++k) {
            SubgroupDesc s = eval(f, Et("0", k));
            CHECK(s.kind == SubgroupDesc::Kind::Exponent);
            CHECK(s.exponent <= k);
        }
    }
}
