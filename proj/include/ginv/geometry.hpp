#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginv/actions.hpp"

namespace ginv::geom {

struct Tolerances {
    // Singular values below rank_zero * sigma_max count as zero; those in
    // [rank_zero, rank_band] * sigma_max make the rank indeterminate.
    double rank_zero = 1e-8;
    double rank_band = 1e-5;
    double polar = 1e-6;
    double nonpolar = 1e-3;
    double fd_step = 1e-4;
    double curvature = 0.05;
};

/// Unit vector in R^N (|v| = 1 within 1e-12).
class PointOnSphere {
public:
    explicit PointOnSphere(Vec coords);
    static PointOnSphere normalized(const Vec &v);

    const Vec &coords() const { return coords_; }
    std::size_t dim() const { return static_cast<std::size_t>(coords_.size()); }

private:
    Vec coords_;
};

struct RankInfo {
    std::size_t rank = 0;
    Vec singular_values;
};

// Throws IndeterminateRank when a singular value lies inside the band.
RankInfo numerical_rank(const Mat &m, const Tolerances &tol = {});

std::size_t orbit_dim(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol = {});
std::size_t isotropy_dim(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol = {});

/// Orthonormal basis (columns) of the common kernel of the algebra elements.
Mat fixed_point_subspace_algebra(const std::vector<Mat> &algebra_elements, const Tolerances &tol = {});
/// Orthonormal basis (columns) of the vectors fixed by every group element.
Mat fixed_point_subspace_group(const std::vector<Mat> &group_elements, const Tolerances &tol = {});

struct SliceRep {
    Vec base_point;
    std::vector<Mat> isotropy_algebra; // ambient matrices annihilating the base point
    Mat orbit_tangent;                 // orthonormal columns spanning {X v}
    Mat normal_basis;                  // orthonormal columns spanning the normal space inside T_v S
    std::vector<Mat> slice_action;     // isotropy algebra in normal-basis coordinates

    std::size_t orbit_dim() const { return static_cast<std::size_t>(orbit_tangent.cols()); }
    std::size_t isotropy_dim() const { return isotropy_algebra.size(); }
    std::size_t normal_dim() const { return static_cast<std::size_t>(normal_basis.cols()); }
};

SliceRep slice_rep(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol = {});

enum class PolarityVerdict { Polar, NonPolar, Inconclusive };
std::string to_string(PolarityVerdict v);

struct PolarityWitness {
    Vec regular_vector;         // in normal-basis coordinates
    Mat cross_section;          // orthonormal basis of a_u, normal-basis coordinates
    std::size_t slice_orbit_dim = 0;
    std::vector<double> residuals; // one per sampled u' in a_u
};

struct PolarityResult {
    PolarityVerdict verdict = PolarityVerdict::Polar;
    double max_residual = 0.0;
    bool trivial_action = false;
    PolarityWitness witness;
};

/// Dadok-style test of the slice representation: a_u is the orthocomplement
/// of the slice orbit tangent at a regular u, and the action is polar iff
/// <X u', a> = 0 for every u' and a in a_u.
PolarityResult polarity_test(const SliceRep &s, std::size_t samples, std::uint64_t seed, const Tolerances &tol = {});

struct CurvatureSample {
    Vec point;
    Vec x, y;
    double kappa = 0.0;
    double error_estimate = 0.0;
    std::optional<double> dist_to_target;
};

/// Sectional curvature of the quotient at the image of v for the horizontal
/// orthonormal pair (x, y): kappa = 1 + 3 |A_x y|^2 with A_x y = V(nabla_x Y)
/// for the horizontal extension Y = P_H y, differentiated along the great
/// circle through v in direction x by central differences with one
/// Richardson level.
CurvatureSample oneill_curvature(const PointOnSphere &v, const Vec &x, const Vec &y, const AlgebraBasis &h,
                                 const Tolerances &tol = {});

struct MaxCurvature {
    double kappa_max = 0.0;
    double error_estimate = 0.0;
    Mat horizontal; // orthonormal basis of the horizontal space
};

/// Maximum sectional curvature over horizontal planes at v. Exact over the
/// Grassmannian when the horizontal space has dimension <= 3; otherwise the
/// maximum over coordinate planes and `samples` random planes.
MaxCurvature max_sectional_curvature(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol = {},
                                     std::size_t samples = 64, std::uint64_t seed = 0);

struct DistanceOptions {
    std::size_t restarts = 8;
    std::uint64_t seed = 0;
    std::size_t max_iterations = 4000;
    double gradient_tol = 1e-13;
};

struct DistanceResult {
    double distance = 0.0; // radians, upper bound on the quotient distance
    double max_inner = 0.0;
    Mat best_element;
};

/// arccos of max_g <v, g w>, by gradient ascent in exponential coordinates
/// from random starts in every connected component.
DistanceResult orbit_distance(const PointOnSphere &v, const PointOnSphere &w, const GroupAction &g,
                              const DistanceOptions &opts = {});

struct ApproachStep {
    double t = 0.0;
    double distance = 0.0;
    double kappa_max = 0.0;
    double scaled = 0.0; // kappa_max * distance^2
};

/// Samples z(t) = cos t * target + sin t * direction for t = t0 / 2^i,
/// i = 0..halvings, recording the maximal curvature and the distance to the
/// orbit of target.
std::vector<ApproachStep> approach_sequence(const GroupAction &g, const PointOnSphere &target, const Vec &direction,
                                            double t0, std::size_t halvings, const Tolerances &tol = {},
                                            std::uint64_t seed = 0);

} // namespace ginv::geom
