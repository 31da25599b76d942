#include <doctest.h>

#include "../oracles.hpp"
#include "ginv/hemisphere.hpp"
#include "ginv/invariants.hpp"

using namespace ginv;

TEST_CASE("Neumann spectrum of the curvature-4 hemisphere")
{
    const NeumannSpectrum s = neumann_spectrum(8);
    REQUIRE(s.entries.size() == 9);
    for (const auto &e : s.entries) {
        const auto j = static_cast<std::int64_t>(e.degree);
        CAPTURE(j);
        CHECK(e.eigenvalue == 4 * j * (j + 2));
        CHECK(e.multiplicity + e.dirichlet_multiplicity == (j + 1) * (j + 1));
        CHECK(e.multiplicity == oracle::harmonic_parity_numeric(static_cast<int>(j), false));
        CHECK(e.dirichlet_multiplicity == oracle::harmonic_parity_numeric(static_cast<int>(j), true));
        CHECK(e.multiplicity > 0);
        if (j >= 1) CHECK(e.dirichlet_multiplicity > 0);
    }
    CHECK(s.entries[0].multiplicity == 1);
    CHECK(s.entries[1].eigenvalue == 12);
    CHECK(s.entries[1].multiplicity == 3);
    CHECK(s.entries[2].multiplicity == 6);
}

TEST_CASE("parity counts on other dimensions")
{
    // Degree-2 harmonics on R^2: x^2-y^2 (even in y) and xy (odd).
    CHECK(harmonic_parity_count(2, 2, false) == 1);
    CHECK(harmonic_parity_count(2, 2, true) == 1);
    // On R^3 the degree-j harmonics number 2j+1.
    for (std::size_t j = 0; j < 6; ++j)
        CHECK(harmonic_parity_count(3, j, false) + harmonic_parity_count(3, j, true) ==
              static_cast<std::int64_t>(2 * j + 1));
}

TEST_CASE("hemisphere spectrum differs from the U(3)-invariant spectrum")
{
    const auto [h1, h2] = isospectral_pair(3);
    const ComparisonReport r = spectra_equal(levels(harmonic_spectrum(h1, 12)), levels(neumann_spectrum(8)));
    CHECK_FALSE(r.match);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->eigenvalue == 12);
    CHECK(r.first_mismatch->multiplicity_a == 0);
    CHECK(r.first_mismatch->multiplicity_b == 3);
}
