#include <doctest.h>

#include "ginv/errors.hpp"
#include "ginv/laurent.hpp"
#include "ginv/lie_data.hpp"

using namespace ginv;

TEST_CASE("laurent arithmetic and constant term")
{
    const LaurentPoly x = LaurentPoly::monomial(WeightVector{1, 0});
    const LaurentPoly xinv = LaurentPoly::monomial(WeightVector{-1, 0});
    const LaurentPoly one = LaurentPoly::constant(2, 1);
    const LaurentPoly p = (one - x) * (one - xinv); // 2 - x - 1/x
    CHECK(constant_term(p) == 2);
    CHECK(p.coefficient(WeightVector{1, 0}) == -1);
    CHECK(p.size() == 3);
    CHECK(constant_term_of_product(one - x, one - xinv) == 2);
    CHECK((p - p).is_zero());
    CHECK(p.shifted(WeightVector{1, 0}).coefficient(WeightVector{2, 0}) == -1);
    CHECK_THROWS_AS(x + LaurentPoly::constant(3, 1), InvalidInput);
}

TEST_CASE("coefficients stay exact past 64 bits")
{
    LaurentPoly p = LaurentPoly::constant(1, BigInt(1) << 62);
    p = p * p * p;
    CHECK(constant_term(p) == (BigInt(1) << 186));
}

TEST_CASE("geometric factor times 1 + q z^mu")
{
    // (1 + q z^mu) / (1 - q z^mu) = 1 + sum_{k>=1} 2 q^k z^{k mu}.
    const WeightVector mu{2, -1};
    TruncatedSeries s = geometric_factor(mu, 6);
    s.multiply_linear(mu);
    CHECK(s[0] == LaurentPoly::constant(2, 1));
    for (int k = 1; k <= 6; ++k) CHECK(s[k] == LaurentPoly::monomial(k * mu, 2));
}

TEST_CASE("multiply_geometric agrees with series product")
{
    const WeightVector mu{1, 1};
    TruncatedSeries a = TruncatedSeries::one(2, 5);
    a.multiply_geometric(mu);
    a.multiply_geometric(-mu);
    const TruncatedSeries b = geometric_factor(mu, 5) * geometric_factor(-mu, 5);
    CHECK(a == b);
    // [q^2] of 1/((1-qz)(1-q/z)) in the torus variable is z^2 + 1 + z^-2.
    CHECK(a[2].coefficient(WeightVector{0, 0}) == 1);
    CHECK(a[2].coefficient(WeightVector{2, 2}) == 1);
}

TEST_CASE("Weyl normalization: CT of the density equals |W|")
{
    for (const GroupSpec &g : {make_unitary(1), make_unitary(2), make_unitary(3), make_symplectic(1),
                               make_symplectic(2), make_so_even(2), make_so_even(3),
                               product(make_symplectic(1), make_so_even(2))})
        CHECK(constant_term(weyl_density(g.roots(), g.rank())) == BigInt(g.weyl_order()));
}
