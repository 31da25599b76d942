#include <doctest.h>

#include <cmath>

#include "ginv/errors.hpp"
#include "ginv/geometry.hpp"

#include <unsupported/Eigen/MatrixFunctions>

using namespace ginv;
using namespace ginv::geom;

TEST_CASE("numerical rank bands")
{
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 1e-10;
    CHECK(numerical_rank(m).rank == 1);
    m(1, 1) = 1e-6;
    CHECK_THROWS_AS(numerical_rank(m), IndeterminateRank);
    m(1, 1) = 1e-3;
    CHECK(numerical_rank(m).rank == 2);
    CHECK(numerical_rank(Mat::Zero(3, 2)).rank == 0);
}

TEST_CASE("points must lie on the unit sphere")
{
    CHECK_THROWS_AS(PointOnSphere(Vec::Ones(3)), InvalidInput);
    CHECK_NOTHROW(PointOnSphere::normalized(Vec::Ones(3)));
}

TEST_CASE("algebra bases reject non-skew generators")
{
    CHECK_THROWS_AS(AlgebraBasis({Mat::Identity(2, 2)}, 2), InvalidInput);
    Mat j = Mat::Zero(2, 2);
    j(0, 1) = -1;
    j(1, 0) = 1;
    const AlgebraBasis b({j, 2.0 * j}, 2);
    CHECK(b.dim() == 1);
}

TEST_CASE("group dimensions of the actions")
{
    CHECK(unitary_action(3).algebra.dim() == 9);
    CHECK(symplectic_action(1).algebra.dim() == 3);
    CHECK(orthogonal_action(2).algebra.dim() == 6);
    CHECK(pair_h1_action(3).algebra.dim() == 9);
    CHECK(pair_h2_action(3).algebra.dim() == 9);
    CHECK(reduced_o1_action().algebra.dim() == 4);
    CHECK(reduced_o2_action().algebra.dim() == 4);
    CHECK(reduced_o2_action().components.size() == 2);
}

TEST_CASE("orbit and isotropy dimensions add up and are equivariant")
{
    std::mt19937_64 rng(11);
    for (const GroupAction &g : {reduced_o1_action(), reduced_o2_action(), pair_h1_action(3), pair_h2_action(3)}) {
        for (int i = 0; i < 10; ++i) {
            const PointOnSphere p(random_unit_vector(g.ambient_dim(), rng));
            const auto iso = isotropy_dim(p, g.algebra);
            CHECK(orbit_dim(p, g.algebra) + iso == g.algebra.dim());
            const Mat h = random_group_element(g, rng);
            CHECK((h.transpose() * h - Mat::Identity(h.rows(), h.cols())).norm() < 1e-10);
            CHECK(isotropy_dim(PointOnSphere::normalized(h * p.coords()), g.algebra) == iso);
        }
    }
}

TEST_CASE("reduced orbit spaces are three dimensional")
{
    std::mt19937_64 rng(5);
    for (const GroupAction &g : {reduced_o1_action(), reduced_o2_action()}) {
        std::size_t best = 8;
        for (int i = 0; i < 20; ++i)
            best = std::min(best, 7 - orbit_dim(PointOnSphere(random_unit_vector(8, rng)), g.algebra));
        CHECK(best == 3);
    }
    // Same on S^11 for the pair.
    for (const GroupAction &g : {pair_h1_action(3), pair_h2_action(3)}) {
        std::size_t best = 12;
        for (int i = 0; i < 10; ++i)
            best = std::min(best, 11 - orbit_dim(PointOnSphere(random_unit_vector(12, rng)), g.algebra));
        CHECK(best == 3);
    }
}

TEST_CASE("principal isotropy fixed sets and embeddings")
{
    for (bool first : {true, false}) {
        const Mat k = first ? h1_principal_isotropy_generator() : h2_principal_isotropy_generator();
        const Mat fixed = fixed_point_subspace_algebra({k});
        CHECK(fixed.cols() == 8);
        std::mt19937_64 rng(3);
        for (int i = 0; i < 5; ++i) {
            const Vec v = random_unit_vector(8, rng);
            const Vec e = first ? embed_reduced_o1(v) : embed_reduced_o2(v);
            CHECK(std::abs(e.norm() - 1.0) < 1e-12);
            CHECK((k * e).norm() < 1e-12);
        }
        // The group-level fixed set of exp(tK) agrees.
        const Mat g = (0.7 * k).exp();
        CHECK(fixed_point_subspace_group({g}).cols() == 8);
    }
}

TEST_CASE("slice representation at the O2 vertex")
{
    Vec v = Vec::Zero(8);
    v(0) = 0.6;
    v(3) = 0.8;
    const SliceRep s = slice_rep(PointOnSphere(v), reduced_o2_action().algebra);
    CHECK(s.isotropy_dim() == 1);
    CHECK(s.orbit_dim() == 3);
    CHECK(s.normal_dim() == 4);
    CHECK((s.normal_basis.transpose() * v).norm() < 1e-12);
    CHECK((s.normal_basis.transpose() * s.orbit_tangent).norm() < 1e-12);
    const PolarityResult r = polarity_test(s, 32, 0);
    CHECK(r.verdict == PolarityVerdict::NonPolar);
    CHECK(r.max_residual > 1e-3);
}

TEST_CASE("generic points have polar (trivial) slice representations")
{
    std::mt19937_64 rng(2);
    const PointOnSphere p(random_unit_vector(8, rng));
    const PolarityResult r = polarity_test(slice_rep(p, reduced_o2_action().algebra), 16, 1);
    CHECK(r.verdict == PolarityVerdict::Polar);
    CHECK(r.trivial_action);
}

TEST_CASE("O1 has constant curvature 4")
{
    const GroupAction g = reduced_o1_action();
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        const PointOnSphere p(random_unit_vector(8, rng));
        const SliceRep s = slice_rep(p, g.algebra);
        REQUIRE(s.normal_dim() == 3);
        const CurvatureSample c = oneill_curvature(p, s.normal_basis.col(0), s.normal_basis.col(1), g.algebra);
        CHECK(std::abs(c.kappa - 4.0) < 1e-6);
        CHECK(c.error_estimate < 1e-4);
        CHECK(std::abs(max_sectional_curvature(p, g.algebra).kappa_max - 4.0) < 1e-6);
    }
}

TEST_CASE("curvature needs a horizontal orthonormal pair")
{
    const GroupAction g = reduced_o1_action();
    std::mt19937_64 rng(1);
    const PointOnSphere p(random_unit_vector(8, rng));
    const SliceRep s = slice_rep(p, g.algebra);
    CHECK_THROWS_AS(oneill_curvature(p, s.normal_basis.col(0), s.normal_basis.col(0), g.algebra), InvalidInput);
    CHECK_THROWS_AS(oneill_curvature(p, s.orbit_tangent.col(0), s.normal_basis.col(0), g.algebra), InvalidInput);
}

TEST_CASE("orbit distance is a symmetric metric on sampled triples")
{
    const GroupAction g = reduced_o2_action();
    std::mt19937_64 rng(21);
    for (int i = 0; i < 4; ++i) {
        const PointOnSphere a(random_unit_vector(8, rng)), b(random_unit_vector(8, rng)), c(random_unit_vector(8, rng));
        const double ab = orbit_distance(a, b, g).distance;
        const double ba = orbit_distance(b, a, g).distance;
        const double bc = orbit_distance(b, c, g).distance;
        const double ac = orbit_distance(a, c, g).distance;
        CHECK(std::abs(ab - ba) < 1e-6);
        CHECK(ac <= ab + bc + 1e-5);
        CHECK(orbit_distance(a, a, g).distance < 1e-6);
        const Mat h = random_group_element(g, rng);
        CHECK(orbit_distance(a, PointOnSphere::normalized(h * a.coords()), g).distance < 1e-6);
    }
}
