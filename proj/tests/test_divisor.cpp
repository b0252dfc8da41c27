#include <doctest.h>

#include "test_util.hpp"
#include "zg/dsl.hpp"
#include "zg/errors.hpp"

using namespace zg;
using zgtest::Rng;

namespace {
FiniteDivisor D(const std::string& s) { return dsl::parse_divisor(s); }
GaussRational G(const std::string& s) { return dsl::parse_gauss(s); }
} // namespace

TEST_CASE("divisor product, gcd, lcm: frozen examples") {
    CHECK(div_mul(D("{1:2}"), D("{1:1, 3:1}")) == D("{1:3, 3:1}"));
    CHECK(div_mul(D("{1:2}"), D("{}")) == D("{1:2}"));
    CHECK(div_gcd(D("{1:3, 2:1}"), D("{1:1, 3:2}")) == D("{1:1}"));
    CHECK(div_lcm(D("{1:3, 2:1}"), D("{1:1, 3:2}")) == D("{1:3, 2:1, 3:2}"));
    FiniteDivisor f = D("{1:2, i:1}");
    CHECK(div_gcd(f, f) == f);
    CHECK(div_lcm(f, f) == f);
}

TEST_CASE("divides: frozen examples") {
    CHECK(divides(D("{1:1}"), D("{1:2, 5:1}")));
    CHECK_FALSE(divides(D("{1:3}"), D("{1:2}")));
    CHECK(divides(D("{}"), D("{1:1}"))); // unit class divides everything
}

TEST_CASE("adequate split: frozen examples") {
    auto [h, u] = adequate_split(D("{1:2, 2:1}"), D("{2:3, 5:1}"));
    CHECK(h == D("{1:2}"));
    CHECK(u == D("{2:1}"));
    FiniteDivisor f = D("{1:1, i:2}");
    auto [h2, u2] = adequate_split(f, D("{}"));
    CHECK(h2 == f);
    CHECK(u2.is_unit_class());
    auto [h3, u3] = adequate_split(f, f);
    CHECK(h3.is_unit_class());
    CHECK(u3 == f);
}

TEST_CASE("split_coprime on finite divisors") {
    auto s = split_coprime(D("{1:2, 3:1}"));
    REQUIRE(s.has_value());
    CHECK(s->first == D("{1:2}"));
    CHECK(s->second == D("{3:1}"));
    CHECK_FALSE(split_coprime(D("{1:5}")).has_value());
    CHECK_FALSE(split_coprime(D("{}")).has_value());
}

TEST_CASE("to_poly / from_poly round trips and errors") {
    SplitScalar s = from_poly(dsl::parse_poly("z^2-2*z+1"), {G("1")});
    CHECK(s.unit == GaussRational(1));
    CHECK(s.divisor == D("{1:2}"));

    SplitScalar s2 = from_poly(dsl::parse_poly("z^2+1"), {G("i"), G("-i")});
    CHECK(s2.unit == GaussRational(1));
    CHECK(s2.divisor == D("{i:1, -i:1}"));

    CHECK_THROWS_WITH_AS(from_poly(dsl::parse_poly("z^2+z+1"), {}),
                         doctest::Contains("unsplit factor remains"), DomainError);
}

TEST_CASE("property: gcd*lcm = product of divisors") {
    Rng rng(1);
    for (int it = 0; it < 500; ++it) {
        FiniteDivisor f = zgtest::random_divisor(rng), g = zgtest::random_divisor(rng);
        CHECK(div_mul(div_gcd(f, g), div_lcm(f, g)) == div_mul(f, g));
    }
}

TEST_CASE("property: divides agrees with the polynomial division oracle") {
    Rng rng(2);
    for (int it = 0; it < 500; ++it) {
        SplitScalar f = zgtest::random_split_scalar(rng, 4, 3);
        SplitScalar g = zgtest::random_split_scalar(rng, 4, 3);
        bool by_divisor = divides(f.divisor, g.divisor);
        bool by_poly = Poly::divmod(to_poly(g), to_poly(f)).second.is_zero();
        CHECK(by_divisor == by_poly);
    }
}

TEST_CASE("property: adequate split contract on random pairs") {
    Rng rng(3);
    for (int it = 0; it < 500; ++it) {
        FiniteDivisor f = zgtest::random_divisor(rng);
        if (f.is_unit_class()) continue;
        FiniteDivisor g = zgtest::random_divisor(rng);
        auto [h, u] = adequate_split(f, g);
        CHECK(div_mul(h, u) == f);
        CHECK(div_gcd(h, g).is_unit_class());
        for (auto& [p, m] : u.support()) CHECK(g.multiplicity(p) > 0);
    }
}

TEST_CASE("property: finite coprime splits reassemble") {
    Rng rng(4);
    for (int it = 0; it < 500; ++it) {
        FiniteDivisor f = zgtest::random_divisor(rng);
        auto s = split_coprime(f);
        if (!s) {
            CHECK(f.support_size() < 2);
            continue;
        }
        CHECK(div_mul(s->first, s->second) == f);
        CHECK(div_gcd(s->first, s->second).is_unit_class());
        CHECK_FALSE(s->first.is_unit_class());
        CHECK_FALSE(s->second.is_unit_class());
    }
}

TEST_CASE("property: to_poly round trip through from_poly") {
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        SplitScalar s = zgtest::random_split_scalar(rng, 4, 3);
        Poly p = to_poly(s);
        std::vector<GaussRational> roots;
        for (auto& [t, m] : s.divisor.support()) roots.push_back(t);
        SplitScalar back = from_poly(p, roots);
        CHECK(back.unit == s.unit);
        CHECK(back.divisor == s.divisor);
        CHECK(to_poly(back) == p);
    }
}
