#include <doctest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "zg/dsl.hpp"
#include "zg/smith.hpp"

using namespace zg;
using zgtest::Rng;

namespace {

Poly P(const std::string& s) { return dsl::parse_poly(s); }

PolyMatrix M(std::vector<std::vector<std::string>> rows) {
    PolyMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) m.at(i, j) = P(rows[i][j]);
    return m;
}

void check_snf(const PolyMatrix& a) {
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    Poly du = s.u.det(), dv = s.v.det();
    CHECK(du.is_unit());
    CHECK(dv.is_unit());
    // Diagonal, monic, divisibility chain.
    for (size_t i = 0; i < s.d.rows(); ++i)
        for (size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j).is_zero());
    auto inv = s.invariant_factors();
    for (size_t i = 0; i < inv.size(); ++i) {
        if (inv[i].is_zero()) continue;
        CHECK(inv[i].is_monic());
        if (i + 1 < inv.size() && !inv[i + 1].is_zero()) CHECK(Poly::divides(inv[i], inv[i + 1]));
    }
    // Products of invariant factors match the determinantal divisors.
    Poly prod = Poly::one();
    for (size_t j = 1; j <= inv.size(); ++j) {
        Poly delta = zgoracle::determinantal_divisor(a, j);
        prod = prod * inv[j - 1];
        if (delta.is_zero())
            CHECK(prod.is_zero());
        else
            CHECK(prod.monic() == delta);
    }
}

} // namespace

TEST_CASE("smith normal form: frozen small cases") {
    // Already diagonal with the right divisibility: unchanged factors.
    SmithDecomposition s1 = smith_normal_form(M({{"z", "0"}, {"0", "z^2"}}));
    CHECK(s1.invariant_factors()[0] == P("z"));
    CHECK(s1.invariant_factors()[1] == P("z^2"));

    // gcd of entries z, determinant z^2: invariant factors (z, z).
    SmithDecomposition s2 = smith_normal_form(M({{"z", "z"}, {"0", "z"}}));
    CHECK(s2.invariant_factors()[0] == P("z"));
    CHECK(s2.invariant_factors()[1] == P("z"));

    // Coprime diagonal collapses: d1 = 1, d2 = product.
    SmithDecomposition s3 = smith_normal_form(M({{"z-1", "0"}, {"0", "z-2"}}));
    CHECK(s3.invariant_factors()[0] == Poly::one());
    CHECK(s3.invariant_factors()[1] == P("(z-1)*(z-2)").monic());

    check_snf(M({{"z", "0"}, {"0", "z^2"}}));
    check_snf(M({{"z", "z"}, {"0", "z"}}));
    check_snf(M({{"z-1", "0"}, {"0", "z-2"}}));
}

TEST_CASE("smith normal form handles rank deficiency and rectangles") {
    check_snf(M({{"0", "0"}, {"0", "0"}}));
    check_snf(M({{"z", "z^2", "z^3"}}));
    check_snf(M({{"z"}, {"z^2"}, {"1"}}));
    check_snf(M({{"z", "z"}, {"z", "z"}}));
    check_snf(M({{"z^2-1", "z-1"}, {"z+1", "1"}}));
}

TEST_CASE("property: 200 random matrices satisfy the full contract") {
    Rng rng(31);
    for (int it = 0; it < 200; ++it) check_snf(zgtest::random_matrix(rng, 3, 3));
}
