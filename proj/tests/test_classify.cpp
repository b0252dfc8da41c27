#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"
#include "zg/dsl.hpp"
#include "zg/errors.hpp"

using namespace zg;
using zgtest::Rng;

namespace {

AdmissibleTriple T(const std::string& s) { return dsl::parse_triple(s); }
Cut C(const std::string& s, bool free_tier = false) { return dsl::parse_cut(s, free_tier); }

std::vector<AdmissibleTriple> catalog_corpus() {
    std::vector<AdmissibleTriple> out;
    // Fixed finite length triples, both cuts nonzero.
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned l = 1; l <= 4; ++l) {
            out.push_back(T("triple(fixed(0), " + std::to_string(k) + ", " + std::to_string(l) +
                            ")"));
            out.push_back(T("triple(fixed(i), " + std::to_string(k) + ", " + std::to_string(l) +
                            ")"));
        }
    // Fixed with a zero cut.
    out.push_back(T("triple(fixed(0), 2, 0)"));
    out.push_back(T("triple(fixed(1), 0, 3)"));
    // The field point.
    out.push_back(T("triple(empty, 0, 0)"));
    // Free generics.
    out.push_back(T("triple(free, above(1), above(1))"));
    out.push_back(T("triple(free, deg(1), deg(1))"));
    out.push_back(T("triple(free, deg(2), deg(2))"));
    // Free finite endolength.
    for (unsigned a = 1; a <= 3; ++a)
        for (unsigned b = 1; b <= 3; ++b)
            out.push_back(T("triple(free, above(" + std::to_string(a) + "), above(" +
                            std::to_string(b) + "))"));
    // Free principal with growing generators, zero cuts, degree mixes.
    out.push_back(T("triple(free, above(n+1), above(n^2))"));
    out.push_back(T("triple(free, above(1), above(n^2+n))"));
    out.push_back(T("triple(free, above(n), 0)"));
    out.push_back(T("triple(free, 0, above(n^2))"));
    out.push_back(T("triple(free, deg(1), above(n))"));
    out.push_back(T("triple(free, above(n^3), deg(2))"));
    out.push_back(T("triple(free, deg(2), 0)"));
    out.push_back(T("triple(free, 0, deg(1))"));
    return out;
}

} // namespace

TEST_CASE("validate_triple: the four cases and the violations") {
    CHECK(validate_triple(T("triple(fixed(0), 2, 1)")).matched_case == 4);
    CHECK(validate_triple(T("triple(empty, 0, 0)")).matched_case == 1);
    CHECK(validate_triple(T("triple(fixed(0), 2, 0)")).matched_case == 2);
    CHECK(validate_triple(T("triple(free, 0, above(n))")).matched_case == 3);

    AdmissibleTriple bad{UltrafilterSpec::fixed(GaussRational(0)),
                         Cut::principal_above(EPSeq::make(IntPoly::var())), Cut::zero()};
    TripleValidation v = validate_triple(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.detail.find("tier mismatch") != std::string::npos);

    AdmissibleTriple bad2{UltrafilterSpec::empty(), Cut::fixed_threshold(1), Cut::zero()};
    CHECK_FALSE(validate_triple(bad2).ok);

    AdmissibleTriple bad3{UltrafilterSpec::fixed(GaussRational(0)), Cut::zero(), Cut::zero()};
    CHECK_FALSE(validate_triple(bad3).ok);
}

TEST_CASE("weakly prime verification runs on every catalog cut") {
    for (auto* s : {"0", "2", "above(n)", "deg(1)"}) {
        std::string reason;
        bool free_tier = std::string(s).find("(") != std::string::npos;
        CHECK(is_weakly_prime(C(s, free_tier), &reason));
        CHECK_FALSE(reason.empty());
    }
}

TEST_CASE("weakly prime, concretely: complements closed under pointwise max") {
    Rng rng(51);
    // PrincipalAbove(gamma): two sequences eventually below gamma have their
    // max eventually below gamma.
    for (int it = 0; it < 100; ++it) {
        EPSeq gamma = zgtest::random_epseq(rng, 2);
        if (!gamma.cofinitely_positive()) continue;
        EPSeq a = zgtest::random_epseq(rng, 2), b = zgtest::random_epseq(rng, 2);
        if (eps_cmp(a, gamma) != EpsOrder::Less || eps_cmp(b, gamma) != EpsOrder::Less) continue;
        // max(a, b) is eventually one of the two.
        EPSeq mx = eps_cmp(a, b) == EpsOrder::Less ? b : a;
        CHECK(eps_cmp(mx, gamma) == EpsOrder::Less);
    }
}

TEST_CASE("sharp: frozen examples with the brute-force oracle") {
    // FixedThreshold(k) sharpens to the maximal cut; oracle over small m, j.
    for (unsigned k = 1; k <= 6; ++k) {
        Cut s = sharp(C(std::to_string(k)));
        CHECK(s == C("1"));
        CHECK(zgoracle::sharp_threshold_brute(k) == 1);
    }
    CHECK(sharp(C("deg(1)", true)) == C("deg(1)", true));
    CHECK(sharp(C("above(n)", true)) == C("above(1)", true));
    CHECK(sharp(C("0")) == C("0"));
}

TEST_CASE("sharp is prime, inflationary, idempotent on the catalog") {
    std::vector<Cut> cuts = {C("0"), C("1"), C("4"), C("above(n)", true), C("above(3)", true),
                             C("above(n^2+n)", true), C("deg(1)", true), C("deg(3)", true)};
    for (auto& c : cuts) {
        Cut s = sharp(c);
        CHECK(is_prime_cut(s));
        CHECK(cut_subseteq(c, s)); // inflationary
        CHECK(sharp(s) == s);                                 // idempotent
    }
}

TEST_CASE("sharp monotonicity holds within each cut shape") {
    std::vector<Cut> fixed = {C("0"), C("5"), C("3"), C("1")};
    for (auto& a : fixed)
        for (auto& b : fixed)
            if (cut_subseteq(a, b)) CHECK(cut_subseteq(sharp(a), sharp(b)));
    std::vector<Cut> free_cuts = {C("0"), C("above(n^2)", true), C("deg(2)", true),
                                  C("above(n)", true), C("deg(1)", true), C("above(3)", true),
                                  C("above(1)", true)};
    for (auto& a : free_cuts)
        for (auto& b : free_cuts) {
            if (!cut_subseteq(a, b)) continue;
            // A principal cut inside a degree cut is the one shape where
            // sharpening overshoots: it lands on the maximal cut, above the
            // degree prime.
            bool overshoot = a.kind == Cut::Kind::PrincipalAbove &&
                             b.kind == Cut::Kind::DegreeAtLeast;
            CHECK(cut_subseteq(sharp(a), sharp(b)) == !overshoot);
        }
    // The concrete witness: above(n^2) sits inside deg(2), its sharp is the
    // maximal cut, and deg(2) is a strictly smaller prime.
    CHECK(cut_subseteq(C("above(n^2)", true), C("deg(2)", true)));
    CHECK(sharp(C("above(n^2)", true)) == C("above(1)", true));
    CHECK(cut_subseteq(C("deg(2)", true), C("above(1)", true)));
    CHECK_FALSE(cut_subseteq(C("above(1)", true), C("deg(2)", true)));
}

TEST_CASE("prime cuts: frozen examples") {
    CHECK(is_prime_cut(C("1")));
    CHECK_FALSE(is_prime_cut(C("2")));
    // The doubling closure example: n lies in the cut of 2n scaled, but not
    // in the cut itself, so above(2n) is not prime.
    CHECK_FALSE(is_prime_cut(C("above(2*n)", true)));
    EPSeq n = dsl::parse_epseq("n"), two_n = dsl::parse_epseq("2*n");
    CHECK(eps_cmp(two_n, n.scaled(2)) != EpsOrder::Greater); // 2*(n) reaches the generator
    CHECK(eps_cmp(n, two_n) == EpsOrder::Less);              // but n itself stays below
    CHECK(is_prime_cut(C("deg(2)", true)));
    CHECK(is_prime_cut(C("above(1)", true)));
    CHECK(is_prime_cut(C("0")));
}

TEST_CASE("localizing ideal: frozen examples") {
    CHECK(localizing_ideal(T("triple(fixed(2), 3, 2)")) == C("1"));
    CHECK(localizing_ideal(T("triple(empty, 0, 0)")) == C("0"));
    CHECK(localizing_ideal(T("triple(free, deg(1), 0)")) == C("deg(1)", true));
    CHECK(localizing_ideal(T("triple(free, above(n^2), above(1))")) == C("above(1)", true));
}

TEST_CASE("shift equivalence: frozen examples") {
    // (2,3) ~ (4,1): the threshold sum 5 is invariant.
    auto w1 = shift_equivalent(T("triple(fixed(0), 2, 3)"), T("triple(fixed(0), 4, 1)"));
    REQUIRE(w1.has_value());
    CHECK(w1->direction == ShiftWitness::Direction::Inverse);
    CHECK(w1->fixed_amount == 2);
    CHECK_FALSE(shift_equivalent(T("triple(fixed(0), 2, 3)"), T("triple(fixed(0), 3, 3)")).has_value());
    // Different support points never identify.
    CHECK_FALSE(shift_equivalent(T("triple(fixed(0), 2, 3)"), T("triple(fixed(1), 2, 3)")).has_value());
    // The worked free example: (n+1, n^2) ~ (1, n^2+n) with witness n.
    auto w2 = shift_equivalent(T("triple(free, above(n+1), above(n^2))"),
                               T("triple(free, above(1), above(n^2+n))"));
    REQUIRE(w2.has_value());
    CHECK(w2->direction == ShiftWitness::Direction::Direct);
    CHECK(w2->free_amount == dsl::parse_int_poly("n"));
    // Zero cuts shift to zero cuts only.
    CHECK(shift_equivalent(T("triple(fixed(0), 2, 0)"), T("triple(fixed(0), 5, 0)")).has_value());
    CHECK(shift_equivalent(T("triple(fixed(0), 0, 2)"), T("triple(fixed(0), 0, 7)")).has_value());
    CHECK_FALSE(shift_equivalent(T("triple(fixed(0), 2, 0)"), T("triple(fixed(0), 2, 1)")).has_value());
    // Degree cuts are shift invariant.
    CHECK(shift_equivalent(T("triple(free, deg(2), above(n))"),
                           T("triple(free, deg(2), above(n+5))")).has_value());
    CHECK_FALSE(shift_equivalent(T("triple(free, deg(2), above(n))"),
                                 T("triple(free, deg(2), above(n^2))")).has_value());
    CHECK_FALSE(shift_equivalent(T("triple(free, deg(1), 0)"), T("triple(free, deg(2), 0)")).has_value());
}

TEST_CASE("fixed-tier shift equivalence matches the orbit oracle") {
    GaussRational t0(0);
    for (unsigned k1 = 0; k1 <= 5; ++k1)
        for (unsigned l1 = 0; l1 <= 5; ++l1) {
            if (k1 == 0 && l1 == 0) continue;
            auto orbit = zgoracle::shift_orbit(k1, l1, 6, 12);
            for (unsigned k2 = 0; k2 <= 5; ++k2)
                for (unsigned l2 = 0; l2 <= 5; ++l2) {
                    if (k2 == 0 && l2 == 0) continue;
                    AdmissibleTriple a{UltrafilterSpec::fixed(t0),
                                       k1 ? Cut::fixed_threshold(k1) : Cut::zero(),
                                       l1 ? Cut::fixed_threshold(l1) : Cut::zero()};
                    AdmissibleTriple b{UltrafilterSpec::fixed(t0),
                                       k2 ? Cut::fixed_threshold(k2) : Cut::zero(),
                                       l2 ? Cut::fixed_threshold(l2) : Cut::zero()};
                    bool lib = shift_equivalent(a, b).has_value();
                    bool oracle = orbit.count({k2, l2}) > 0;
                    CHECK(lib == oracle);
                }
        }
}

TEST_CASE("classification: frozen examples") {
    Classification c1 = classify(T("triple(fixed(1/2), 3, 1)"));
    CHECK(c1.cls.kind == PointClass::Kind::IsolatedFiniteLength);
    CHECK(c1.cls.n == 3);
    CHECK(c1.isolated);
    CHECK(c1.closed);
    CHECK_FALSE(c1.survives_cb);

    Classification c2 = classify(T("triple(empty, 0, 0)"));
    CHECK(c2.cls.kind == PointClass::Kind::QPoint);
    CHECK(c2.closed);
    CHECK_FALSE(c2.isolated);
    CHECK(c2.survives_cb);
    CHECK(c2.closed_in_derivative);

    Classification c3 = classify(T("triple(free, above(2), above(1))"));
    CHECK(c3.cls.kind == PointClass::Kind::FreeFiniteEndolength);
    CHECK(c3.cls.n == 2);
    CHECK(c3.closed);
    CHECK(c3.survives_cb);
    CHECK_FALSE(c3.closed_in_derivative); // closed points after the derivative are generics

    Classification c4 = classify(T("triple(free, deg(1), deg(1))"));
    CHECK(c4.cls.kind == PointClass::Kind::Generic);
    CHECK(c4.closed);
    CHECK(c4.closed_in_derivative);

    Classification c5 = classify(T("triple(free, above(n+1), above(n^2))"));
    CHECK(c5.cls.kind == PointClass::Kind::Other);
    CHECK(c5.survives_cb);
    CHECK_FALSE(c5.closed);

    Classification c6 = classify(T("triple(fixed(0), 1, 1)"));
    CHECK(c6.cls.kind == PointClass::Kind::IsolatedFiniteLength);
    CHECK(c6.cls.n == 1);
    CHECK(c6.closed); // coincides with the generic Q(E/M_t)
}

TEST_CASE("pp_type_of_element: frozen examples and the class invariant") {
    AdmissibleTriple t0 = pp_type_of_element(GaussRational(0), 3, 0);
    CHECK(t0 == T("triple(fixed(0), 3, 1)"));
    AdmissibleTriple t2 = pp_type_of_element(GaussRational(0), 3, 2);
    CHECK(t2 == T("triple(fixed(0), 1, 3)"));
    CHECK_THROWS_AS(pp_type_of_element(GaussRational(0), 3, 3), DomainError);

    for (unsigned n = 1; n <= 5; ++n) {
        AdmissibleTriple first = pp_type_of_element(GaussRational(1), n, 0);
        for (unsigned j = 0; j < n; ++j) {
            AdmissibleTriple tj = pp_type_of_element(GaussRational(1), n, j);
            CHECK(tj.i.k + tj.j.k == n + 1);
            CHECK(shift_equivalent(first, tj).has_value());
            Classification c = classify(tj);
            CHECK(c.cls.kind == PointClass::Kind::IsolatedFiniteLength);
            CHECK(c.cls.n == n);
        }
    }
}

TEST_CASE("property: shift equivalence is an equivalence, classify is constant on classes") {
    auto corpus = catalog_corpus();
    for (auto& a : corpus) CHECK(shift_equivalent(a, a).has_value()); // reflexive
    for (auto& a : corpus)
        for (auto& b : corpus) {
            bool ab = shift_equivalent(a, b).has_value();
            bool ba = shift_equivalent(b, a).has_value();
            CHECK(ab == ba); // symmetric
            if (!ab) continue;
            Classification ca = classify(a), cb = classify(b);
            CHECK(ca.cls.kind == cb.cls.kind);
            CHECK(ca.isolated == cb.isolated);
            CHECK(ca.closed == cb.closed);
            CHECK(ca.survives_cb == cb.survives_cb);
            CHECK(localizing_ideal(a) == localizing_ideal(b)); // shift invariant
            CHECK(canonical_triple(a) == canonical_triple(b));
        }
    for (auto& a : corpus)
        for (auto& b : corpus)
            for (auto& c : corpus) {
                if (shift_equivalent(a, b).has_value() && shift_equivalent(b, c).has_value())
                    CHECK(shift_equivalent(a, c).has_value()); // transitive
            }
}

TEST_CASE("canonical triples are fixed points and stay in the class") {
    auto corpus = catalog_corpus();
    for (auto& a : corpus) {
        AdmissibleTriple c = canonical_triple(a);
        CHECK(validate_triple(c).ok);
        CHECK(shift_equivalent(a, c).has_value());
        CHECK(canonical_triple(c) == c);
    }
}
