#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ginv::geom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Real Lie algebra acting on R^N by skew-symmetric matrices. Stored
/// orthonormal with respect to the Frobenius inner product.
class AlgebraBasis {
public:
    AlgebraBasis() = default;
    // Throws InvalidInput on non-square, mismatched, or non-skew matrices.
    // Linearly dependent generators are dropped.
    explicit AlgebraBasis(const std::vector<Mat> &generators, std::size_t ambient_dim);

    const std::vector<Mat> &matrices() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    // Columns X_i v.
    Mat evaluate(const Vec &v) const;
    // sum_i c_i X_i.
    Mat element(const Vec &coeffs) const;

private:
    std::vector<Mat> basis_;
    std::size_t ambient_ = 0;
};

/// A compact group acting orthogonally: the Lie algebra of its identity
/// component plus one representative per connected component (identity
/// first).
struct GroupAction {
    std::string name;
    AlgebraBasis algebra;
    std::vector<Mat> components;

    std::size_t ambient_dim() const { return algebra.ambient_dim(); }
};

// C^N -> R^{2N} with coordinates (Re z_1, Im z_1, Re z_2, ...).
Vec realify(const CVec &z);
CVec complexify(const Vec &x);
Mat realify(const CMat &m);

// u(n) on C^n, or on C^n + (C^n)* when with_dual (matrix A acts as A + conj(A)).
GroupAction unitary_action(int n, bool with_dual = true);
// sp(m) inside u(2m) on C^{2m}.
GroupAction symplectic_action(int m);
// so(2k) acting on C^{2k} by real matrices.
GroupAction orthogonal_action(int k);
// Block direct sum on the direct sum of the ambient spaces.
GroupAction direct_sum(const GroupAction &a, const GroupAction &b, const std::string &name);
GroupAction trivial_action(std::size_t ambient_dim);

// The isospectral pair on S^{4n-1} = unit sphere of C^{2n}.
GroupAction pair_h1_action(int n);
GroupAction pair_h2_action(int n);

// Reduced actions on S^7. O1: U(2) on C^2 + (C^2)*, v = (v1, v2).
// O2: Sp(1) x O(2) on C^2 + C + C, v = (v1, v2, v3); Sp(1) acts on v1, SO(2)
// rotates v2 and v3 together by e^{i theta}, and the second component acts by
// complex conjugation of v2 and v3.
GroupAction reduced_o1_action();
GroupAction reduced_o2_action();

// Lie algebra generator of the principal isotropy K used for principal
// isotropy reduction of the n = 3 pair on S^11.
Mat h1_principal_isotropy_generator();
Mat h2_principal_isotropy_generator();
// Linear isometries R^8 -> Fix(K) in R^12 carrying the reduced actions onto
// the induced normalizer actions.
Vec embed_reduced_o1(const Vec &reduced);
Vec embed_reduced_o2(const Vec &reduced);

// exp of a random algebra element, times a random component representative
// when any_component is set.
Mat random_group_element(const GroupAction &g, std::mt19937_64 &rng, bool any_component = true);

Vec random_unit_vector(std::size_t dim, std::mt19937_64 &rng);

} // namespace ginv::geom
