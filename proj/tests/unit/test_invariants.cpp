#include <doctest.h>

#include <boost/math/special_functions/binomial.hpp>

#include "fixtures.hpp"
#include "ginv/actions.hpp"
#include "ginv/errors.hpp"
#include "ginv/invariants.hpp"

using namespace ginv;

TEST_CASE("molien series matches the Weyl alternation oracle on fixtures")
{
    for (const auto &f : molien_fixtures()) {
        CAPTURE(f.name);
        const auto c = molien_series(f.spec, 4);
        for (int k = 0; k <= 4; ++k) CHECK(c[k] == oracle::molien_by_alternation(f.spec.factors(), f.vars, k));
    }
}

TEST_CASE("molien series of the pair matches the oracle through degree 6")
{
    const auto [h1, h2] = isospectral_pair(3);
    for (const GroupSpec &g : {h1, h2}) {
        const auto c = molien_series(g, 6);
        const auto vars = as_oracle(g.ambient_weight_list());
        for (int k = 0; k <= 6; ++k) CHECK(c[k] == oracle::molien_by_alternation(g.factors(), vars, k));
    }
}

TEST_CASE("known fixture series")
{
    // U(1) on C: invariants generated by |z|^2.
    const auto c = molien_series(molien_fixtures()[0].spec, 6);
    CHECK(c == std::vector<BigInt>{1, 0, 1, 0, 1, 0, 1});
    // Sp(1) on H is transitive on S^3: only powers of |x|^2.
    const auto s = molien_series(molien_fixtures()[3].spec, 6);
    CHECK(s == std::vector<BigInt>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("H1 and H2 Hilbert series agree through degree 12")
{
    const auto [h1, h2] = isospectral_pair(3);
    const auto c1 = molien_series(h1, 12);
    const auto c2 = molien_series(h2, 12);
    CHECK(c1 == c2);
    CHECK(c1 == std::vector<BigInt>{1, 0, 4, 0, 10, 0, 20, 0, 35, 0, 56, 0, 84});
}

TEST_CASE("pruning does not change results")
{
    const auto [h1, h2] = isospectral_pair(3);
    MolienOptions prune{true};
    CHECK(molien_series(h1, 8, prune) == molien_series(h1, 8));
    CHECK(molien_series(h2, 8, prune) == molien_series(h2, 8));
}

TEST_CASE("series is bounded by the monomial count and invariant under negating weights")
{
    const auto [h1, h2] = isospectral_pair(3);
    for (const GroupSpec &g : {h1, h2}) {
        const auto c = molien_series(g, 8);
        const int dim = g.ambient_real_dim();
        for (int k = 0; k <= 8; ++k)
            CHECK(c[k] <= BigInt(static_cast<long long>(
                              boost::math::binomial_coefficient<double>(static_cast<unsigned>(k + dim - 1), k))));
        std::vector<WeightMultiplicity> neg;
        for (const auto &w : g.ambient_weights()) neg.push_back({-w.weight, w.multiplicity});
        CHECK(molien_series(g.with_ambient_weights(neg), 8) == c);
    }
}

TEST_CASE("molien_series needs ambient weights")
{
    CHECK_THROWS_AS(molien_series(make_unitary(2), 4), InvalidSpec);
}

TEST_CASE("complex invariant count equals the real invariant dimension")
{
    // Real kernel of the Lie algebra on real polynomials, independent of weights.
    const geom::GroupAction a1 = geom::pair_h1_action(3);
    const geom::GroupAction a2 = geom::pair_h2_action(3);
    const auto [h1, h2] = isospectral_pair(3);
    const auto c1 = molien_series(h1, 4);
    const auto c2 = molien_series(h2, 4);
    for (int k = 0; k <= 4; ++k) {
        CAPTURE(k);
        CHECK(BigInt(oracle::real_invariant_dim(a1.algebra.matrices(), 12, k)) == c1[k]);
        CHECK(BigInt(oracle::real_invariant_dim(a2.algebra.matrices(), 12, k)) == c2[k]);
    }
}

TEST_CASE("harmonic spectrum of the pair")
{
    const auto [h1, h2] = isospectral_pair(3);
    const HarmonicSpectrum s1 = harmonic_spectrum(h1, 12);
    const HarmonicSpectrum s2 = harmonic_spectrum(h2, 12);
    CHECK(s1.sphere_dim == 11);
    REQUIRE(s1.entries.size() == 13);
    for (std::size_t k = 0; k <= 12; ++k) {
        CHECK(s1.entries[k].eigenvalue == static_cast<std::int64_t>(k * (k + 10)));
        CHECK(s1.entries[k].multiplicity == s2.entries[k].multiplicity);
        if (k % 2) CHECK(s1.entries[k].multiplicity == 0);
    }
    // m_k = c_k - c_{k-2}: 1,0,3,0,6,0,10,...
    CHECK(s1.entries[2].multiplicity == 3);
    CHECK(s1.entries[4].multiplicity == 6);
    CHECK(s1.entries[12].multiplicity == 28);
    CHECK(spectra_equal(s1, s2).match);
    CHECK(spectra_equal(s1, s1).match);
}

TEST_CASE("spectrum_from_hilbert rejects decreasing series")
{
    CHECK_THROWS(spectrum_from_hilbert(3, {1, 0, 2, 0, 1}));
    const HarmonicSpectrum s = spectrum_from_hilbert(3, {1, 0, 2, 0, 3});
    CHECK(s.entries[4].multiplicity == 1);
    CHECK(s.entries[4].eigenvalue == 4 * 6);
}

TEST_CASE("spectra_equal reports the first differing eigenvalue")
{
    const HarmonicSpectrum a = spectrum_from_hilbert(3, {1, 0, 2, 0, 3});
    const HarmonicSpectrum b = spectrum_from_hilbert(3, {1, 0, 1, 0, 3});
    const ComparisonReport r = spectra_equal(a, b);
    CHECK_FALSE(r.match);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->eigenvalue == 8);
    CHECK(r.first_mismatch->multiplicity_a == 1);
    CHECK(r.first_mismatch->multiplicity_b == 0);
    REQUIRE(r.first_mismatch->degree);
    CHECK(*r.first_mismatch->degree == 2);
}

TEST_CASE("partitions")
{
    CHECK_THROWS_AS(Partition({1, 2}), InvalidParameter);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidParameter);
    CHECK(Partition({3, 1, 0}).length() == 2);
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).boxes() == 4);
    CHECK(partitions_up_to(4, 5).size() == 12);
    CHECK(partitions_up_to(4, 2).size() == 9);
    CHECK(Partition({2, 1}).to_string() == "(2,1)");
}

TEST_CASE("schur characters match tableau enumeration")
{
    const std::vector<WeightVector> x{WeightVector{1, 0, 0}, WeightVector{0, 1, 0}, WeightVector{0, 0, 1}};
    for (const auto &lam : partitions_up_to(4, 3)) {
        CAPTURE(lam.to_string());
        std::vector<std::vector<int>> contents;
        oracle::ssyt_contents(lam.parts(), 3, contents);
        LaurentPoly want(3);
        for (const auto &c : contents) want.add_term(WeightVector(c), 1);
        CHECK(schur_character(lam, x, 3) == want);
    }
}

TEST_CASE("irrep invariant dimensions match the tableau oracle and agree across the pair")
{
    const auto [h1, h2] = isospectral_pair(3);
    const auto t1 = as_oracle(h1.complex_weights());
    const auto t2 = as_oracle(h2.complex_weights());
    for (const auto &lam : partitions_up_to(4, 5)) {
        CAPTURE(lam.to_string());
        const BigInt d1 = invariant_dim_in_irrep(lam, h1);
        const BigInt d2 = invariant_dim_in_irrep(lam, h2);
        CHECK(d1 == d2);
        CHECK(d1 == oracle::irrep_invariants_by_tableaux(h1.factors(), t1, lam.parts()));
        CHECK(d2 == oracle::irrep_invariants_by_tableaux(h2.factors(), t2, lam.parts()));
    }
    CHECK(invariant_dim_in_irrep(Partition({2, 2}), h1) == 2);
    CHECK(invariant_dim_in_irrep(Partition(), h1) == 1);
}

TEST_CASE("irrep invariants reject partitions longer than N-1")
{
    const auto [h1, h2] = isospectral_pair(3);
    CHECK_THROWS_AS(invariant_dim_in_irrep(Partition({1, 1, 1, 1, 1, 1}), h1), InvalidParameter);
    CHECK_THROWS_AS(invariant_dim_in_irrep(Partition({1}), make_unitary(2)), InvalidSpec);
}
