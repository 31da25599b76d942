#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ginv/laurent.hpp"
#include "ginv/lie_data.hpp"

namespace ginv {

struct MolienOptions {
    // Drop monomials that can no longer cancel to the zero exponent within the
    // remaining degree budget. Results are identical with or without it.
    bool prune = false;
};

/// Dimensions c_0..c_D of the degree-k invariant polynomials on the ambient
/// space, via the Molien-Weyl constant term
///   c_k = CT[ prod_alpha (1 - z^alpha) * [q^k] prod_j 1/(1 - q z^{mu_j}) ] / |W|.
std::vector<BigInt> molien_series(const GroupSpec &g, std::size_t degree_cap, MolienOptions opts = {});

struct SpectrumEntry {
    std::size_t degree;
    std::int64_t eigenvalue; // k(k + d - 1) on the unit round S^d
    BigInt multiplicity;
};

struct HarmonicSpectrum {
    int sphere_dim = 0;
    std::vector<SpectrumEntry> entries;
    std::vector<BigInt> hilbert; // raw c_k
};

// m_0 = c_0, m_1 = c_1, m_k = c_k - c_{k-2}.
HarmonicSpectrum spectrum_from_hilbert(int sphere_dim, std::vector<BigInt> hilbert);

/// G-invariant Laplace spectrum of S^d, d = ambient_real_dim - 1.
HarmonicSpectrum harmonic_spectrum(const GroupSpec &g, std::size_t degree_cap, MolienOptions opts = {});

/// Weakly decreasing positive parts (trailing zeros are dropped).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int boxes() const;
    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

// All partitions with at most max_boxes boxes and at most max_length parts,
// ordered by box count then reverse lexicographically.
std::vector<Partition> partitions_up_to(int max_boxes, std::size_t max_length);

/// Schur polynomial s_lambda(x_1..x_N) with x_i = z^{torus_map[i]}, via the
/// Jacobi-Trudi determinant in complete (or elementary, whichever matrix is
/// smaller) homogeneous polynomials. No division is performed.
LaurentPoly schur_character(const Partition &lambda, const std::vector<WeightVector> &torus_map,
                            std::size_t rank);

/// dim of H-invariant vectors in the SU(N) irrep with highest weight lambda,
/// where H sits in SU(N) through the given torus map (N = torus_map.size()).
BigInt invariant_dim_in_irrep(const Partition &lambda, const GroupSpec &h,
                              const std::vector<WeightVector> &torus_map);
// Uses h.complex_weights() as the torus map.
BigInt invariant_dim_in_irrep(const Partition &lambda, const GroupSpec &h);

/// Eigenvalue -> multiplicity (zero multiplicities omitted), together with
/// the largest eigenvalue up to which the table is complete.
struct SpectrumLevels {
    std::map<std::int64_t, BigInt> multiplicity;
    std::int64_t complete_through = 0;
    std::optional<int> sphere_dim; // set for harmonic spectra
    std::map<std::int64_t, std::size_t> degree_of; // eigenvalue -> degree
};

SpectrumLevels levels(const HarmonicSpectrum &s);

struct SpectrumMismatch {
    std::int64_t eigenvalue;
    BigInt multiplicity_a;
    BigInt multiplicity_b;
    std::optional<std::size_t> degree; // reported when both sides share a sphere dimension
};

struct ComparisonReport {
    bool match = true;
    std::optional<SpectrumMismatch> first_mismatch;
    std::int64_t compared_through = 0;
};

/// Compares the (eigenvalue, multiplicity) tables over the eigenvalue range
/// both sides cover and reports the smallest eigenvalue of disagreement.
ComparisonReport spectra_equal(const SpectrumLevels &a, const SpectrumLevels &b);
ComparisonReport spectra_equal(const HarmonicSpectrum &a, const HarmonicSpectrum &b);

} // namespace ginv
