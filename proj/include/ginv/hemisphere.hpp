#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ginv/invariants.hpp"

namespace ginv {

struct NeumannEntry {
    std::size_t degree;                 // j
    std::int64_t eigenvalue;            // 4 j (j + 2) at sectional curvature 4
    std::int64_t multiplicity;          // harmonics even in the reflection coordinate
    std::int64_t dirichlet_multiplicity; // harmonics odd in the reflection coordinate
};

/// Neumann spectrum of the closed 3-hemisphere of constant curvature 4.
struct NeumannSpectrum {
    std::vector<NeumannEntry> entries;
};

/// Dimension of degree-j harmonic polynomials on R^vars that are even
/// (odd_parity = false) or odd in the last coordinate, by exact rank of the
/// Laplacian over the rationals.
std::int64_t harmonic_parity_count(std::size_t vars, std::size_t degree, bool odd_parity);

NeumannSpectrum neumann_spectrum(std::size_t max_degree);

SpectrumLevels levels(const NeumannSpectrum &s);

} // namespace ginv
