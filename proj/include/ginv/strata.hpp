#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ginv/geometry.hpp"

namespace ginv::strata {

using geom::Vec;

enum class Space { O1, O2 };
std::string to_string(Space s);
Space space_from_name(const std::string &name); // "o1" / "o2"

/// The reduced action whose strata a table describes.
geom::GroupAction reduced_action(Space s);

/// One row of an isotropy table. The sampler maps free real parameters to an
/// (unnormalized) point satisfying the row's defining conditions exactly.
struct StratumRow {
    std::string label;
    int expected_isotropy_dim;
    int expected_qcodim;
    std::size_t param_count;
    std::function<Vec(const Vec &params)> sampler;

    // Draws generic parameters and returns the normalized sample.
    geom::PointOnSphere sample(std::mt19937_64 &rng) const;
    Vec draw_params(std::mt19937_64 &rng) const;
};

// Isotropy table rows. O1 = S^7/U(2) with v = (v1, v2) in C^2 + C^2;
// O2 = S^7/Sp(1)xO(2) with v = (v1, v2, v3) in C^2 + C + C.
std::vector<StratumRow> table_rows(Space s);
const StratumRow &table_row(Space s, const std::string &label);

struct RowReport {
    std::string label;
    int expected_isotropy_dim = 0;
    int expected_qcodim = 0;
    std::size_t samples = 0;
    std::size_t isotropy_matches = 0;
    std::size_t retries = 0;
    int family_dim = 0;     // dimension of the row's point family on the sphere
    int orbit_dim = 0;
    int measured_qcodim = 0; // quotient_dim - (family_dim - orbit_dim)
    bool family_invariant = true; // orbit directions tangent to the family
    bool passed = false;
    std::optional<Vec> offending_point;
    std::string failure;
};

struct TableReport {
    Space space;
    int quotient_dim = 0;
    std::uint64_t seed = 0;
    std::vector<RowReport> rows;
    bool passed() const;
};

struct VerifyOptions {
    std::size_t retry_budget = 20;
    geom::Tolerances tol{};
};

TableReport verify_table(Space s, std::size_t samples, std::uint64_t seed, const VerifyOptions &opts = {});

/// r1 = |v1|, r2 = |v2|, alpha = angle between v2 and v3 as vectors of
/// R^2 = C, or -1 where v2 or v3 vanishes.
struct QuotientCoords {
    double r1 = 0.0;
    double r2 = 0.0;
    double alpha = 0.0;
    std::string stratum;
};

constexpr double kUndefinedAngle = -1.0;

QuotientCoords quotient_coords(const Vec &v, const std::string &stratum = "");

/// Samples every row of the O2 table (samples per row) and returns the orbit
/// coordinates tagged by row label.
std::vector<QuotientCoords> emit_quotient_coords(std::size_t samples, std::uint64_t seed);

void write_csv(std::ostream &os, const std::vector<QuotientCoords> &rows);

} // namespace ginv::strata
