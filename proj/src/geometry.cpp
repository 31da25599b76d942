#include "ginv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "ginv/errors.hpp"

namespace ginv::geom {

namespace {

std::size_t rank_from_singular_values(const Vec &sv, const Tolerances &tol)
{
    if (sv.size() == 0) return 0;
    const double smax = sv.maxCoeff();
    if (smax == 0.0) return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        const double rel = sv(i) / smax;
        if (rel < tol.rank_zero) continue;
        if (rel <= tol.rank_band)
            throw IndeterminateRank("singular value ratio " + std::to_string(rel) + " inside ambiguity band");
        ++rank;
    }
    return rank;
}

Mat stacked(const std::vector<Mat> &ms, bool subtract_identity)
{
    const Eigen::Index n = ms.front().cols();
    Mat s(n * static_cast<Eigen::Index>(ms.size()), n);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        Mat block = ms[i];
        if (subtract_identity) block -= Mat::Identity(n, n);
        s.middleRows(static_cast<Eigen::Index>(i) * n, n) = block;
    }
    return s;
}

Mat null_space(const Mat &m, const Tolerances &tol)
{
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const std::size_t r = rank_from_singular_values(svd.singularValues(), tol);
    return svd.matrixV().rightCols(m.cols() - static_cast<Eigen::Index>(r));
}

Mat orthonormal_complement(const Mat &cols, Eigen::Index n)
{
    if (cols.cols() == 0) return Mat::Identity(n, n);
    Eigen::HouseholderQR<Mat> qr(cols);
    const Mat q = qr.householderQ() * Mat::Identity(n, n);
    return q.rightCols(n - cols.cols());
}

// Orthonormal basis of the orbit tangent at q, which must have the given rank.
Mat vertical_basis(const Vec &q, const AlgebraBasis &h, std::size_t expected_rank, const Tolerances &tol)
{
    const Mat m = h.evaluate(q);
    if (m.cols() == 0) return Mat(q.size(), 0);
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU);
    std::size_t r = 0;
    try {
        r = rank_from_singular_values(svd.singularValues(), tol);
    } catch (const IndeterminateRank &e) {
        throw StencilDegeneracy(std::string("orbit rank ambiguous inside stencil: ") + e.what());
    }
    if (r != expected_rank)
        throw StencilDegeneracy("orbit dimension changes inside the finite-difference stencil");
    return svd.matrixU().leftCols(static_cast<Eigen::Index>(r));
}

struct TensorEstimate {
    Vec a;         // A_x y
    Vec a_coarse;  // from the finer central difference alone
};

TensorEstimate oneill_tensor(const Vec &p, const Vec &x, const Vec &y, const AlgebraBasis &h, std::size_t orbit_rank,
                             const Tolerances &tol)
{
    auto extension = [&](double t) {
        Vec q = std::cos(t) * p + std::sin(t) * x;
        q.normalize();
        const Mat v = vertical_basis(q, h, orbit_rank, tol);
        Vec yq = y - q.dot(y) * q;
        if (v.cols() > 0) yq -= v * (v.transpose() * y);
        return yq;
    };
    auto central = [&](double step) { return Vec((extension(step) - extension(-step)) / (2.0 * step)); };
    const double step = tol.fd_step;
    const Vec d1 = central(step);
    const Vec d2 = central(step / 2.0);
    const Vec rich = (4.0 * d2 - d1) / 3.0;
    const Mat vp = vertical_basis(p, h, orbit_rank, tol);
    TensorEstimate out;
    if (vp.cols() == 0) {
        out.a = Vec::Zero(p.size());
        out.a_coarse = Vec::Zero(p.size());
    } else {
        out.a = vp * (vp.transpose() * rich);
        out.a_coarse = vp * (vp.transpose() * d2);
    }
    return out;
}

double kappa_of(const Vec &a) { return 1.0 + 3.0 * a.squaredNorm(); }

} // namespace

PointOnSphere::PointOnSphere(Vec coords) : coords_(std::move(coords))
{
    if (coords_.size() == 0 || std::abs(coords_.norm() - 1.0) > 1e-12)
        throw InvalidInput("point is not on the unit sphere");
}

PointOnSphere PointOnSphere::normalized(const Vec &v)
{
    const double n = v.norm();
    if (n == 0.0) throw InvalidInput("cannot normalize the zero vector");
    return PointOnSphere(v / n);
}

RankInfo numerical_rank(const Mat &m, const Tolerances &tol)
{
    RankInfo info;
    if (m.size() == 0) return info;
    Eigen::JacobiSVD<Mat> svd(m);
    info.singular_values = svd.singularValues();
    info.rank = rank_from_singular_values(info.singular_values, tol);
    return info;
}

std::size_t orbit_dim(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol)
{
    if (v.dim() != h.ambient_dim()) throw InvalidInput("point and algebra dimensions differ");
    return numerical_rank(h.evaluate(v.coords()), tol).rank;
}

std::size_t isotropy_dim(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol)
{
    return h.dim() - orbit_dim(v, h, tol);
}

Mat fixed_point_subspace_algebra(const std::vector<Mat> &algebra_elements, const Tolerances &tol)
{
    if (algebra_elements.empty()) throw InvalidInput("fixed_point_subspace needs at least one generator");
    return null_space(stacked(algebra_elements, false), tol);
}

Mat fixed_point_subspace_group(const std::vector<Mat> &group_elements, const Tolerances &tol)
{
    if (group_elements.empty()) throw InvalidInput("fixed_point_subspace needs at least one generator");
    return null_space(stacked(group_elements, true), tol);
}

SliceRep slice_rep(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol)
{
    if (v.dim() != h.ambient_dim()) throw InvalidInput("point and algebra dimensions differ");
    const Vec &p = v.coords();
    const auto n = static_cast<Eigen::Index>(v.dim());
    SliceRep s;
    s.base_point = p;
    if (h.dim() == 0) {
        s.orbit_tangent = Mat(n, 0);
    } else {
        const Mat m = h.evaluate(p);
        Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto r = static_cast<Eigen::Index>(rank_from_singular_values(svd.singularValues(), tol));
        s.orbit_tangent = svd.matrixU().leftCols(r);
        for (Eigen::Index j = r; j < m.cols(); ++j) {
            Mat y = Mat::Zero(n, n);
            for (std::size_t i = 0; i < h.dim(); ++i)
                y += svd.matrixV()(static_cast<Eigen::Index>(i), j) * h.matrices()[i];
            s.isotropy_algebra.push_back(std::move(y));
        }
    }
    Mat span(n, s.orbit_tangent.cols() + 1);
    span.col(0) = p;
    span.rightCols(s.orbit_tangent.cols()) = s.orbit_tangent;
    s.normal_basis = orthonormal_complement(span, n);
    for (const auto &y : s.isotropy_algebra)
        s.slice_action.push_back(s.normal_basis.transpose() * y * s.normal_basis);
    return s;
}

std::string to_string(PolarityVerdict v)
{
    switch (v) {
    case PolarityVerdict::Polar: return "polar";
    case PolarityVerdict::NonPolar: return "non-polar";
    case PolarityVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

PolarityResult polarity_test(const SliceRep &s, std::size_t samples, std::uint64_t seed, const Tolerances &tol)
{
    PolarityResult result;
    const std::size_t nd = s.normal_dim();
    double action_norm = 0.0;
    for (const auto &m : s.slice_action) action_norm = std::max(action_norm, m.norm());
    if (s.slice_action.empty() || nd == 0 || action_norm < 1e-12) {
        result.trivial_action = true;
        result.verdict = PolarityVerdict::Polar;
        return result;
    }

    std::mt19937_64 rng(seed);
    const std::size_t draws = std::max<std::size_t>(samples, 1);
    auto slice_orbit = [&](const Vec &u) {
        Mat b(static_cast<Eigen::Index>(nd), static_cast<Eigen::Index>(s.slice_action.size()));
        for (std::size_t j = 0; j < s.slice_action.size(); ++j)
            b.col(static_cast<Eigen::Index>(j)) = s.slice_action[j] * u;
        return b;
    };

    // Regular vector: largest slice orbit, ties broken by conditioning.
    std::optional<Vec> best;
    std::size_t best_rank = 0;
    double best_margin = -1.0;
    for (std::size_t i = 0; i < draws; ++i) {
        const Vec u = random_unit_vector(nd, rng);
        const Mat b = slice_orbit(u);
        Eigen::JacobiSVD<Mat> svd(b);
        std::size_t r = 0;
        try {
            r = rank_from_singular_values(svd.singularValues(), tol);
        } catch (const IndeterminateRank &) {
            continue;
        }
        const auto &sv = svd.singularValues();
        const double margin = r == 0 ? 0.0 : sv(static_cast<Eigen::Index>(r) - 1) / sv(0);
        if (!best || r > best_rank || (r == best_rank && margin > best_margin)) {
            best = u;
            best_rank = r;
            best_margin = margin;
        }
    }
    if (!best) {
        result.verdict = PolarityVerdict::Inconclusive;
        result.max_residual = std::numeric_limits<double>::quiet_NaN();
        return result;
    }

    const Mat b = slice_orbit(*best);
    Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullU);
    const Mat section = svd.matrixU().rightCols(static_cast<Eigen::Index>(nd - best_rank));
    result.witness.regular_vector = *best;
    result.witness.cross_section = section;
    result.witness.slice_orbit_dim = best_rank;

    auto residual = [&](const Vec &u) {
        double r = 0.0;
        for (const auto &m : s.slice_action) r = std::max(r, (section.transpose() * (m * u)).cwiseAbs().maxCoeff());
        return r;
    };
    if (section.cols() > 0) {
        for (Eigen::Index c = 0; c < section.cols(); ++c) result.witness.residuals.push_back(residual(section.col(c)));
        for (std::size_t i = 0; i < draws; ++i) {
            const Vec coeff = random_unit_vector(static_cast<std::size_t>(section.cols()), rng);
            result.witness.residuals.push_back(residual(section * coeff));
        }
    }
    for (double r : result.witness.residuals) result.max_residual = std::max(result.max_residual, r);

    if (result.max_residual < tol.polar)
        result.verdict = PolarityVerdict::Polar;
    else if (result.max_residual > tol.nonpolar)
        result.verdict = PolarityVerdict::NonPolar;
    else
        result.verdict = PolarityVerdict::Inconclusive;
    return result;
}

CurvatureSample oneill_curvature(const PointOnSphere &v, const Vec &x, const Vec &y, const AlgebraBasis &h,
                                 const Tolerances &tol)
{
    const Vec &p = v.coords();
    if (x.size() != p.size() || y.size() != p.size()) throw InvalidInput("plane vectors have wrong dimension");
    const std::size_t r = orbit_dim(v, h, tol);
    const Mat vp = vertical_basis(p, h, r, tol);
    auto horizontal_defect = [&](const Vec &u) {
        double d = std::abs(u.dot(p));
        if (vp.cols() > 0) d = std::max(d, (vp.transpose() * u).cwiseAbs().maxCoeff());
        return d;
    };
    constexpr double eps = 1e-8;
    if (std::abs(x.norm() - 1.0) > eps || std::abs(y.norm() - 1.0) > eps || std::abs(x.dot(y)) > eps ||
        horizontal_defect(x) > eps || horizontal_defect(y) > eps)
        throw InvalidInput("oneill_curvature needs an orthonormal horizontal pair");

    const TensorEstimate t = oneill_tensor(p, x, y, h, r, tol);
    CurvatureSample out;
    out.point = p;
    out.x = x;
    out.y = y;
    out.kappa = kappa_of(t.a);
    out.error_estimate = std::abs(out.kappa - kappa_of(t.a_coarse));
    return out;
}

MaxCurvature max_sectional_curvature(const PointOnSphere &v, const AlgebraBasis &h, const Tolerances &tol,
                                     std::size_t samples, std::uint64_t seed)
{
    const SliceRep s = slice_rep(v, h, tol);
    const Mat &hb = s.normal_basis;
    const Eigen::Index hd = hb.cols();
    if (hd < 2) throw InvalidInput("horizontal space has no 2-planes");
    const Vec &p = v.coords();
    const std::size_t r = s.orbit_dim();

    MaxCurvature out;
    out.horizontal = hb;
    Mat pair_tensors(p.size(), hd * (hd - 1) / 2);
    double err = 0.0;
    Eigen::Index col = 0;
    double best = 1.0;
    for (Eigen::Index a = 0; a < hd; ++a)
        for (Eigen::Index b = a + 1; b < hd; ++b) {
            const TensorEstimate t = oneill_tensor(p, hb.col(a), hb.col(b), h, r, tol);
            pair_tensors.col(col++) = t.a;
            err = std::max(err, std::abs(kappa_of(t.a) - kappa_of(t.a_coarse)));
            best = std::max(best, kappa_of(t.a));
        }
    if (hd <= 3) {
        // Every unit bivector is decomposable, so the maximum is the top
        // singular value of A on the bivector basis.
        Eigen::JacobiSVD<Mat> svd(pair_tensors);
        const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        out.kappa_max = 1.0 + 3.0 * smax * smax;
        out.error_estimate = err;
        return out;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Vec cx = random_unit_vector(static_cast<std::size_t>(hd), rng);
        Vec cy = random_unit_vector(static_cast<std::size_t>(hd), rng);
        cy -= cy.dot(cx) * cx;
        cy.normalize();
        const TensorEstimate t = oneill_tensor(p, hb * cx, hb * cy, h, r, tol);
        best = std::max(best, kappa_of(t.a));
        err = std::max(err, std::abs(kappa_of(t.a) - kappa_of(t.a_coarse)));
    }
    out.kappa_max = best;
    out.error_estimate = err;
    return out;
}

DistanceResult orbit_distance(const PointOnSphere &v, const PointOnSphere &w, const GroupAction &g,
                              const DistanceOptions &opts)
{
    if (v.dim() != g.ambient_dim() || w.dim() != g.ambient_dim())
        throw InvalidInput("orbit_distance: dimension mismatch");
    const Vec &a = v.coords();
    const Vec &b = w.coords();
    const auto &basis = g.algebra.matrices();
    const auto n = static_cast<Eigen::Index>(g.ambient_dim());
    std::mt19937_64 rng(opts.seed);

    DistanceResult best;
    best.max_inner = -2.0;
    best.best_element = Mat::Identity(n, n);
    for (const auto &component : g.components) {
        for (std::size_t start = 0; start < std::max<std::size_t>(opts.restarts, 1); ++start) {
            Mat current = component;
            if (start > 0 && !basis.empty()) {
                GroupAction identity_only{g.name, g.algebra, {Mat::Identity(n, n)}};
                current = random_group_element(identity_only, rng, false) * component;
            }
            double f = a.dot(current * b);
            double eta = 1.0;
            for (std::size_t it = 0; it < opts.max_iterations && !basis.empty(); ++it) {
                const Vec gb = current * b;
                Vec grad(static_cast<Eigen::Index>(basis.size()));
                for (std::size_t i = 0; i < basis.size(); ++i)
                    grad(static_cast<Eigen::Index>(i)) = a.dot(basis[i] * gb);
                if (grad.norm() < opts.gradient_tol) break;
                const Mat direction = g.algebra.element(grad);
                bool accepted = false;
                while (eta > 1e-14) {
                    const Mat trial = (eta * direction).exp() * current;
                    const double ft = a.dot(trial * b);
                    if (ft > f) {
                        current = trial;
                        f = ft;
                        eta = std::min(eta * 1.5, 8.0);
                        accepted = true;
                        break;
                    }
                    eta *= 0.5;
                }
                if (!accepted) break;
            }
            if (f > best.max_inner) {
                best.max_inner = f;
                best.best_element = current;
            }
        }
    }
    const double chord = (a - best.best_element * b).norm();
    best.distance = 2.0 * std::asin(std::min(1.0, chord / 2.0));
    return best;
}

std::vector<ApproachStep> approach_sequence(const GroupAction &g, const PointOnSphere &target, const Vec &direction,
                                            double t0, std::size_t halvings, const Tolerances &tol,
                                            std::uint64_t seed)
{
    const Vec &p = target.coords();
    if (std::abs(direction.norm() - 1.0) > 1e-10 || std::abs(direction.dot(p)) > 1e-10)
        throw InvalidInput("approach direction must be a unit tangent vector at the target");
    std::vector<ApproachStep> out;
    double t = t0;
    for (std::size_t i = 0; i <= halvings; ++i, t /= 2.0) {
        const PointOnSphere z = PointOnSphere::normalized(std::cos(t) * p + std::sin(t) * direction);
        ApproachStep step;
        step.t = t;
        DistanceOptions opts;
        opts.seed = seed + i;
        step.distance = orbit_distance(z, target, g, opts).distance;
        step.kappa_max = max_sectional_curvature(z, g.algebra, tol, 64, seed + i).kappa_max;
        step.scaled = step.kappa_max * step.distance * step.distance;
        out.push_back(step);
    }
    return out;
}

} // namespace ginv::geom
