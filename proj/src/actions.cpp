#include "ginv/actions.hpp"

#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

#include "ginv/errors.hpp"

namespace ginv::geom {

namespace {

constexpr double kDependenceTol = 1e-12;

std::vector<CMat> unitary_algebra(int n)
{
    const std::complex<double> I(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<CMat> out;
    for (int j = 0; j < n; ++j) {
        CMat x = CMat::Zero(n, n);
        x(j, j) = I;
        out.push_back(x);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            CMat a = CMat::Zero(n, n);
            a(j, k) = s;
            a(k, j) = -s;
            out.push_back(a);
            CMat b = CMat::Zero(n, n);
            b(j, k) = I * s;
            b(k, j) = I * s;
            out.push_back(b);
        }
    return out;
}

Mat block_diag(const Mat &a, const Mat &b)
{
    Mat m = Mat::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    m.topLeftCorner(a.rows(), a.cols()) = a;
    m.bottomRightCorner(b.rows(), b.cols()) = b;
    return m;
}

} // namespace

AlgebraBasis::AlgebraBasis(const std::vector<Mat> &generators, std::size_t ambient_dim) : ambient_(ambient_dim)
{
    const auto n = static_cast<Eigen::Index>(ambient_dim);
    for (const auto &g : generators) {
        if (g.rows() != n || g.cols() != n) throw InvalidInput("algebra generator has wrong shape");
        if ((g + g.transpose()).norm() > 1e-10 * std::max(1.0, g.norm()))
            throw InvalidInput("algebra generator is not skew-symmetric");
        Mat r = g;
        for (const auto &b : basis_) r -= (r.cwiseProduct(b).sum()) * b;
        for (const auto &b : basis_) r -= (r.cwiseProduct(b).sum()) * b;
        const double nr = r.norm();
        if (nr > kDependenceTol * std::max(1.0, g.norm())) basis_.push_back(r / nr);
    }
}

Mat AlgebraBasis::evaluate(const Vec &v) const
{
    Mat m(static_cast<Eigen::Index>(ambient_), static_cast<Eigen::Index>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = basis_[i] * v;
    return m;
}

Mat AlgebraBasis::element(const Vec &coeffs) const
{
    Mat m = Mat::Zero(static_cast<Eigen::Index>(ambient_), static_cast<Eigen::Index>(ambient_));
    for (std::size_t i = 0; i < basis_.size(); ++i) m += coeffs(static_cast<Eigen::Index>(i)) * basis_[i];
    return m;
}

Vec realify(const CVec &z)
{
    Vec x(2 * z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        x(2 * i) = z(i).real();
        x(2 * i + 1) = z(i).imag();
    }
    return x;
}

CVec complexify(const Vec &x)
{
    if (x.size() % 2 != 0) throw InvalidInput("complexify: odd real dimension");
    CVec z(x.size() / 2);
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = {x(2 * i), x(2 * i + 1)};
    return z;
}

Mat realify(const CMat &m)
{
    Mat r(2 * m.rows(), 2 * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double p = m(i, j).real();
            const double q = m(i, j).imag();
            r(2 * i, 2 * j) = p;
            r(2 * i, 2 * j + 1) = -q;
            r(2 * i + 1, 2 * j) = q;
            r(2 * i + 1, 2 * j + 1) = p;
        }
    return r;
}

GroupAction unitary_action(int n, bool with_dual)
{
    if (n < 1) throw InvalidParameter("unitary_action requires n >= 1");
    std::vector<Mat> gens;
    for (const auto &x : unitary_algebra(n)) {
        if (with_dual) {
            CMat full = CMat::Zero(2 * n, 2 * n);
            full.topLeftCorner(n, n) = x;
            full.bottomRightCorner(n, n) = x.conjugate();
            gens.push_back(realify(full));
        } else {
            gens.push_back(realify(x));
        }
    }
    const auto amb = static_cast<std::size_t>(with_dual ? 4 * n : 2 * n);
    GroupAction g{"U(" + std::to_string(n) + ")", AlgebraBasis(gens, amb), {Mat::Identity(amb, amb)}};
    return g;
}

GroupAction symplectic_action(int m)
{
    if (m < 1) throw InvalidParameter("symplectic_action requires m >= 1");
    const int n = 2 * m;
    const auto u = unitary_algebra(n);
    CMat J = CMat::Zero(n, n);
    J.topRightCorner(m, m) = CMat::Identity(m, m);
    J.bottomLeftCorner(m, m) = -CMat::Identity(m, m);

    // Real linear constraint X^T J + J X = 0 on coefficients over the u(2m) basis.
    Mat constraint(2 * n * n, static_cast<Eigen::Index>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i) {
        const CMat c = u[i].transpose() * J + J * u[i];
        for (Eigen::Index r = 0; r < n; ++r)
            for (Eigen::Index s = 0; s < n; ++s) {
                constraint(2 * (r * n + s), static_cast<Eigen::Index>(i)) = c(r, s).real();
                constraint(2 * (r * n + s) + 1, static_cast<Eigen::Index>(i)) = c(r, s).imag();
            }
    }
    Eigen::JacobiSVD<Mat> svd(constraint, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    std::vector<Mat> gens;
    for (Eigen::Index col = 0; col < svd.matrixV().cols(); ++col) {
        const double s = col < sv.size() ? sv(col) : 0.0;
        if (s > 1e-10) continue;
        CMat x = CMat::Zero(n, n);
        for (std::size_t i = 0; i < u.size(); ++i) x += svd.matrixV()(static_cast<Eigen::Index>(i), col) * u[i];
        gens.push_back(realify(x));
    }
    GroupAction g{"Sp(" + std::to_string(m) + ")", AlgebraBasis(gens, static_cast<std::size_t>(2 * n)),
                  {Mat::Identity(2 * n, 2 * n)}};
    if (g.algebra.dim() != static_cast<std::size_t>(m * (2 * m + 1)))
        throw std::logic_error("symplectic_action: wrong algebra dimension");
    return g;
}

GroupAction orthogonal_action(int k)
{
    if (k < 1) throw InvalidParameter("orthogonal_action requires k >= 1");
    const int n = 2 * k;
    std::vector<Mat> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CMat x = CMat::Zero(n, n);
            x(i, j) = 1.0;
            x(j, i) = -1.0;
            gens.push_back(realify(x));
        }
    return {"SO(" + std::to_string(n) + ")", AlgebraBasis(gens, static_cast<std::size_t>(2 * n)),
            {Mat::Identity(2 * n, 2 * n)}};
}

GroupAction direct_sum(const GroupAction &a, const GroupAction &b, const std::string &name)
{
    const auto na = static_cast<Eigen::Index>(a.ambient_dim());
    const auto nb = static_cast<Eigen::Index>(b.ambient_dim());
    std::vector<Mat> gens;
    for (const auto &x : a.algebra.matrices()) gens.push_back(block_diag(x, Mat::Zero(nb, nb)));
    for (const auto &x : b.algebra.matrices()) gens.push_back(block_diag(Mat::Zero(na, na), x));
    std::vector<Mat> comps;
    for (const auto &ca : a.components)
        for (const auto &cb : b.components) comps.push_back(block_diag(ca, cb));
    return {name, AlgebraBasis(gens, static_cast<std::size_t>(na + nb)), comps};
}

GroupAction trivial_action(std::size_t ambient_dim)
{
    const auto n = static_cast<Eigen::Index>(ambient_dim);
    return {"trivial", AlgebraBasis({}, ambient_dim), {Mat::Identity(n, n)}};
}

GroupAction pair_h1_action(int n)
{
    if (n < 3 || n % 2 == 0) throw InvalidParameter("pair action requires an odd n >= 3");
    return unitary_action(n, true);
}

GroupAction pair_h2_action(int n)
{
    if (n < 3 || n % 2 == 0) throw InvalidParameter("pair action requires an odd n >= 3");
    const int m = (n - 1) / 2;
    const int k = n - m;
    return direct_sum(symplectic_action(m), orthogonal_action(k),
                      "Sp(" + std::to_string(m) + ")xSO(" + std::to_string(2 * k) + ")");
}

GroupAction reduced_o1_action()
{
    GroupAction g = unitary_action(2, true);
    g.name = "U(2) on S^7";
    return g;
}

GroupAction reduced_o2_action()
{
    const GroupAction sp1 = symplectic_action(1);
    const std::complex<double> I(0.0, 1.0);
    CMat rot = CMat::Zero(2, 2);
    rot(0, 0) = I;
    rot(1, 1) = I;
    Mat conj = Mat::Identity(4, 4);
    conj(1, 1) = -1.0;
    conj(3, 3) = -1.0;
    const GroupAction o2{"O(2)", AlgebraBasis({realify(rot)}, 4), {Mat::Identity(4, 4), conj}};
    return direct_sum(sp1, o2, "Sp(1)xO(2) on S^7");
}

Mat h1_principal_isotropy_generator()
{
    CMat x = CMat::Zero(6, 6);
    x(0, 0) = {0.0, 1.0};
    x(3, 3) = {0.0, -1.0};
    return realify(x);
}

Mat h2_principal_isotropy_generator()
{
    // Rotation of the (z3, z5) plane inside the SO(4) block on (z3..z6).
    CMat x = CMat::Zero(6, 6);
    x(2, 4) = 1.0;
    x(4, 2) = -1.0;
    return realify(x);
}

Vec embed_reduced_o1(const Vec &reduced)
{
    if (reduced.size() != 8) throw InvalidInput("embed_reduced_o1 expects a vector in R^8");
    const CVec v = complexify(reduced);
    CVec z = CVec::Zero(6);
    z(1) = v(0);
    z(2) = v(1);
    z(4) = v(2);
    z(5) = v(3);
    return realify(z);
}

Vec embed_reduced_o2(const Vec &reduced)
{
    if (reduced.size() != 8) throw InvalidInput("embed_reduced_o2 expects a vector in R^8");
    const CVec v = complexify(reduced);
    CVec z = CVec::Zero(6);
    z(0) = v(0);
    z(1) = v(1);
    z(3) = {v(2).real(), v(3).real()};
    z(5) = {v(2).imag(), v(3).imag()};
    return realify(z);
}

Mat random_group_element(const GroupAction &g, std::mt19937_64 &rng, bool any_component)
{
    std::normal_distribution<double> normal(0.0, 2.0);
    Vec c(static_cast<Eigen::Index>(g.algebra.dim()));
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = normal(rng);
    Mat e = g.algebra.element(c).exp();
    if (any_component && g.components.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, g.components.size() - 1);
        e = e * g.components[pick(rng)];
    }
    return e;
}

Vec random_unit_vector(std::size_t dim, std::mt19937_64 &rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = normal(rng);
    return v / v.norm();
}

} // namespace ginv::geom
