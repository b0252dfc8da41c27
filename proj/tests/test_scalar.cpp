#include <doctest.h>

#include "test_util.hpp"
#include "zg/dsl.hpp"
#include "zg/errors.hpp"
#include "zg/poly.hpp"

using namespace zg;
using zgtest::Rng;

namespace {
Poly P(const std::string& s) { return dsl::parse_poly(s); }
GaussRational G(const std::string& s) { return dsl::parse_gauss(s); }
} // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.num() == BigInt(1));
    CHECK(a.den() == BigInt(2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-3, 9)).str() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DomainError);
}

TEST_CASE("gaussian rationals form a field") {
    GaussRational i = GaussRational::imaginary_unit();
    CHECK(i * i == GaussRational(-1));
    GaussRational x = G("1/2+3i");
    CHECK(x * x.inv() == GaussRational(1));
    CHECK((x / x) == GaussRational(1));
    CHECK(G("2-i") * G("2+i") == GaussRational(5));
}

TEST_CASE("poly divmod: frozen examples") {
    // (z^2-1) / (z-1) = (z+1, 0)
    auto [q1, r1] = Poly::divmod(P("z^2-1"), P("z-1"));
    CHECK(q1 == P("z+1"));
    CHECK(r1.is_zero());
    // (z, z) = (1, 0)
    auto [q2, r2] = Poly::divmod(P("z"), P("z"));
    CHECK(q2 == Poly::one());
    CHECK(r2.is_zero());
    // (z^3+2z, z^2+1) = (z, z); checked by multiplying back
    auto [q3, r3] = Poly::divmod(P("z^3+2*z"), P("z^2+1"));
    CHECK(q3 == P("z"));
    CHECK(r3 == P("z"));
    CHECK(q3 * P("z^2+1") + r3 == P("z^3+2*z"));
    CHECK_THROWS_AS(Poly::divmod(P("z"), Poly::zero()), DomainError);
}

TEST_CASE("poly xgcd: frozen examples") {
    // (z, z-1): gcd 1 via z*1 + (z-1)*(-1)
    auto [g1, u1, v1] = Poly::xgcd(P("z"), P("z-1"));
    CHECK(g1 == Poly::one());
    CHECK(P("z") * u1 + P("z-1") * v1 == Poly::one());

    // degenerate (f, 0)
    auto [g2, u2, v2] = Poly::xgcd(P("2*z+2"), Poly::zero());
    CHECK(g2 == P("z+1"));
    CHECK(u2 == Poly::constant(G("1/2")));
    CHECK(v2.is_zero());

    // ((z-1)^2(z-2), (z-1)(z-3)): gcd z-1 and the identity holds exactly
    Poly f = P("(z-1)^2*(z-2)"), g = P("(z-1)*(z-3)");
    auto [d, u, v] = Poly::xgcd(f, g);
    CHECK(d == P("z-1"));
    CHECK(f * u + g * v == d);

    CHECK_THROWS_AS(Poly::xgcd(Poly::zero(), Poly::zero()), DomainError);
}

TEST_CASE("multiplicity_at: frozen examples") {
    CHECK(P("(z-1)^3*(z-2)").multiplicity_at(G("1")) == 3);
    CHECK(P("z^2+1").multiplicity_at(G("0")) == 0);
    // ((z^2+1)^2, i) = 2 by repeated exact division by (z-i)
    CHECK(P("(z^2+1)^2").multiplicity_at(G("i")) == 2);
    CHECK_THROWS_AS(Poly::zero().multiplicity_at(G("0")), DomainError);
}

TEST_CASE("eval, mul, pow: frozen examples") {
    CHECK(P("z-1").eval(G("1")).is_zero());
    CHECK(P("z") * P("z") == P("z^2"));
    CHECK(P("z-2").pow(3) == P("z^3-6*z^2+12*z-8")); // expanded by repeated mul
    Poly via_mul = P("z-2") * P("z-2") * P("z-2");
    CHECK(P("z-2").pow(3) == via_mul);
}

TEST_CASE("property: xgcd certificate and divisibility, random corpus") {
    Rng rng(20260808);
    for (int it = 0; it < 300; ++it) {
        Poly f = zgtest::random_poly(rng, 8, true);
        Poly g = zgtest::random_poly(rng, 8, true);
        if (f.is_zero() && g.is_zero()) continue;
        auto [d, u, v] = Poly::xgcd(f, g);
        CHECK(f * u + g * v == d);
        CHECK(d.is_monic());
        if (!f.is_zero()) CHECK(Poly::divides(d, f));
        if (!g.is_zero()) CHECK(Poly::divides(d, g));
    }
}

TEST_CASE("property: divmod round trip") {
    Rng rng(7);
    for (int it = 0; it < 300; ++it) {
        Poly f = zgtest::random_poly(rng, 8, true);
        Poly g = zgtest::random_poly(rng, 6);
        auto [q, r] = Poly::divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("property: multiplicity is additive on products") {
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        Poly f = zgtest::random_poly(rng, 4);
        Poly g = zgtest::random_poly(rng, 4);
        GaussRational t = zgtest::random_grid_point(rng);
        CHECK((f * g).multiplicity_at(t) == f.multiplicity_at(t) + g.multiplicity_at(t));
    }
}

TEST_CASE("saturation splits off exactly the shared-root part") {
    Poly a = P("(z-1)^2*(z-2)*(z-3)");
    Poly b = P("(z-1)*(z-3)^4");
    auto [e, s] = a.saturate_against(b);
    CHECK(e * s == a);
    CHECK(Poly::gcd(e, b) == Poly::one());
    CHECK(s == P("(z-1)^2*(z-3)"));
}
