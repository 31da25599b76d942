#include "ginv/strata.hpp"

#include <cmath>
#include <complex>
#include <iomanip>

#include "ginv/errors.hpp"
#include "ginv/parallel.hpp"

namespace ginv::strata {

namespace {

using geom::Mat;
using Cx = std::complex<double>;

Cx cx(const Vec &p, Eigen::Index i) { return {p(2 * i), p(2 * i + 1)}; }

void put(Vec &v, Eigen::Index slot, Cx z)
{
    v(2 * slot) = z.real();
    v(2 * slot + 1) = z.imag();
}

// O1 layout: slots 0,1 = v1; slots 2,3 = v2.
std::vector<StratumRow> table1()
{
    return {
        {"A", 0, 0, 8, [](const Vec &p) { return Vec(p); }},
        {"B1", 1, 1, 6,
         [](const Vec &p) {
             // v1 = z * conj(v2)
             Vec v = Vec::Zero(8);
             const Cx z = cx(p, 2);
             put(v, 2, cx(p, 0));
             put(v, 3, cx(p, 1));
             put(v, 0, z * std::conj(cx(p, 0)));
             put(v, 1, z * std::conj(cx(p, 1)));
             return v;
         }},
        {"B2", 1, 3, 4,
         [](const Vec &p) {
             Vec v = Vec::Zero(8);
             v.head(4) = p;
             return v;
         }},
        {"B3", 1, 3, 4,
         [](const Vec &p) {
             Vec v = Vec::Zero(8);
             v.tail(4) = p;
             return v;
         }},
    };
}

// O2 layout: slots 0,1 = v1; slot 2 = v2; slot 3 = v3.
std::vector<StratumRow> table2()
{
    auto point = [](const Vec &v1, Cx v2, Cx v3) {
        Vec v = Vec::Zero(8);
        v.head(4) = v1;
        put(v, 2, v2);
        put(v, 3, v3);
        return v;
    };
    const Vec zero4 = Vec::Zero(4);
    return {
        {"A", 0, 0, 8, [](const Vec &p) { return Vec(p); }},
        {"B1", 0, 1, 7, [=](const Vec &p) { return point(p.head(4), p(6) * cx(p, 2), cx(p, 2)); }},
        {"B2", 0, 2, 6, [=](const Vec &p) { return point(p.head(4), cx(p, 2), 0.0); }},
        {"B3", 0, 2, 6, [=](const Vec &p) { return point(p.head(4), 0.0, cx(p, 2)); }},
        {"C", 3, 1, 4, [=](const Vec &p) { return point(zero4, cx(p, 0), cx(p, 1)); }},
        {"D", 1, 3, 4, [=](const Vec &p) { return point(p, 0.0, 0.0); }},
        {"E1", 3, 2, 3, [=](const Vec &p) { return point(zero4, p(2) * cx(p, 0), cx(p, 0)); }},
        {"E2", 3, 3, 2, [=](const Vec &p) { return point(zero4, cx(p, 0), 0.0); }},
        {"E3", 3, 3, 2, [=](const Vec &p) { return point(zero4, 0.0, cx(p, 0)); }},
    };
}

// Tangent space of the normalized family at params, projected to T_v S.
Mat family_tangent(const StratumRow &row, const Vec &params)
{
    const Vec raw = row.sampler(params);
    const double norm = raw.norm();
    const Vec v = raw / norm;
    const auto n = raw.size();
    Mat j(n, static_cast<Eigen::Index>(row.param_count));
    const double h = 1e-6;
    for (Eigen::Index i = 0; i < j.cols(); ++i) {
        Vec pp = params, pm = params;
        pp(i) += h;
        pm(i) -= h;
        j.col(i) = (row.sampler(pp) - row.sampler(pm)) / (2.0 * h);
    }
    const Mat proj = Mat::Identity(n, n) - v * v.transpose();
    return proj * j / norm;
}

int generic_orbit_dim(const geom::GroupAction &g, std::mt19937_64 &rng, const geom::Tolerances &tol)
{
    std::size_t best = 0;
    for (int i = 0; i < 8; ++i) {
        try {
            const geom::PointOnSphere p(geom::random_unit_vector(g.ambient_dim(), rng));
            best = std::max(best, geom::orbit_dim(p, g.algebra, tol));
        } catch (const IndeterminateRank &) {
        }
    }
    return static_cast<int>(best);
}

} // namespace

std::string to_string(Space s) { return s == Space::O1 ? "o1" : "o2"; }

Space space_from_name(const std::string &name)
{
    if (name == "o1" || name == "O1") return Space::O1;
    if (name == "o2" || name == "O2") return Space::O2;
    throw InvalidParameter("unknown space '" + name + "' (expected o1 or o2)");
}

geom::GroupAction reduced_action(Space s)
{
    return s == Space::O1 ? geom::reduced_o1_action() : geom::reduced_o2_action();
}

Vec StratumRow::draw_params(std::mt19937_64 &rng) const
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec p(static_cast<Eigen::Index>(param_count));
    for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = normal(rng);
    return p;
}

geom::PointOnSphere StratumRow::sample(std::mt19937_64 &rng) const
{
    return geom::PointOnSphere::normalized(sampler(draw_params(rng)));
}

std::vector<StratumRow> table_rows(Space s) { return s == Space::O1 ? table1() : table2(); }

const StratumRow &table_row(Space s, const std::string &label)
{
    static const std::vector<StratumRow> t1 = table1();
    static const std::vector<StratumRow> t2 = table2();
    for (const auto &r : s == Space::O1 ? t1 : t2)
        if (r.label == label) return r;
    throw InvalidParameter("no row '" + label + "' in the table for " + to_string(s));
}

bool TableReport::passed() const
{
    for (const auto &r : rows)
        if (!r.passed) return false;
    return !rows.empty();
}

TableReport verify_table(Space s, std::size_t samples, std::uint64_t seed, const VerifyOptions &opts)
{
    if (samples < 1) throw InvalidParameter("verify_table needs at least one sample per row");
    const geom::GroupAction g = reduced_action(s);
    const auto rows = table_rows(s);
    TableReport report;
    report.space = s;
    report.seed = seed;
    {
        std::mt19937_64 rng(seed);
        report.quotient_dim = static_cast<int>(g.ambient_dim()) - 1 - generic_orbit_dim(g, rng, opts.tol);
    }
    const int qdim = report.quotient_dim;

    report.rows = parallel_map<RowReport>(rows.size(), [&](std::size_t ri) {
        const StratumRow &row = rows[ri];
        RowReport rr;
        rr.label = row.label;
        rr.expected_isotropy_dim = row.expected_isotropy_dim;
        rr.expected_qcodim = row.expected_qcodim;
        std::mt19937_64 rng(seed + 1000003ULL * (ri + 1));
        bool consistent = true;
        bool first = true;
        while (rr.samples < samples) {
            const Vec params = row.draw_params(rng);
            const geom::PointOnSphere p = geom::PointOnSphere::normalized(row.sampler(params));
            int iso = 0, family = 0, orbit = 0;
            bool invariant = true;
            try {
                iso = static_cast<int>(geom::isotropy_dim(p, g.algebra, opts.tol));
                orbit = static_cast<int>(g.algebra.dim()) - iso;
                const Mat tangent = family_tangent(row, params);
                family = static_cast<int>(geom::numerical_rank(tangent, opts.tol).rank);
                Mat joined(tangent.rows(), tangent.cols() + static_cast<Eigen::Index>(g.algebra.dim()));
                joined << tangent, g.algebra.evaluate(p.coords());
                invariant = static_cast<int>(geom::numerical_rank(joined, opts.tol).rank) == family;
            } catch (const IndeterminateRank &) {
                if (++rr.retries > opts.retry_budget) {
                    rr.failure = "indeterminate rank persisted past the retry budget";
                    rr.offending_point = p.coords();
                    return rr;
                }
                continue;
            }
            ++rr.samples;
            const int qcodim = qdim - (family - orbit);
            if (first) {
                rr.family_dim = family;
                rr.orbit_dim = orbit;
                rr.measured_qcodim = qcodim;
                first = false;
            } else if (family != rr.family_dim || orbit != rr.orbit_dim) {
                consistent = false;
            }
            rr.family_invariant = rr.family_invariant && invariant;
            if (iso == row.expected_isotropy_dim) {
                ++rr.isotropy_matches;
            } else if (!rr.offending_point) {
                rr.offending_point = p.coords();
                rr.failure = "isotropy dimension " + std::to_string(iso) + " != expected " +
                             std::to_string(row.expected_isotropy_dim);
            }
        }
        if (!consistent && rr.failure.empty()) rr.failure = "family or orbit dimension varies across samples";
        if (!rr.family_invariant && rr.failure.empty()) rr.failure = "point family is not a union of orbits";
        if (rr.measured_qcodim != rr.expected_qcodim && rr.failure.empty())
            rr.failure = "qcodim " + std::to_string(rr.measured_qcodim) + " != expected " +
                         std::to_string(rr.expected_qcodim);
        rr.passed = rr.failure.empty();
        return rr;
    });
    return report;
}

QuotientCoords quotient_coords(const Vec &v, const std::string &stratum)
{
    if (v.size() != 8) throw InvalidInput("quotient_coords expects a point of S^7 in R^8");
    QuotientCoords q;
    q.stratum = stratum;
    q.r1 = v.head(4).norm();
    const Cx v2 = cx(v, 2);
    const Cx v3 = cx(v, 3);
    q.r2 = std::abs(v2);
    constexpr double vanish = 1e-14;
    if (std::abs(v2) < vanish || std::abs(v3) < vanish) {
        q.alpha = kUndefinedAngle;
    } else {
        const Cx prod = v2 * std::conj(v3);
        q.alpha = std::atan2(std::abs(prod.imag()), prod.real());
    }
    return q;
}

std::vector<QuotientCoords> emit_quotient_coords(std::size_t samples, std::uint64_t seed)
{
    std::vector<QuotientCoords> out;
    std::mt19937_64 rng(seed);
    for (const auto &row : table_rows(Space::O2))
        for (std::size_t i = 0; i < samples; ++i) out.push_back(quotient_coords(row.sample(rng).coords(), row.label));
    return out;
}

void write_csv(std::ostream &os, const std::vector<QuotientCoords> &rows)
{
    os << "r1,r2,alpha,stratum\n";
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(12);
    for (const auto &r : rows) os << r.r1 << ',' << r.r2 << ',' << r.alpha << ',' << r.stratum << '\n';
    os.flags(flags);
    os.precision(prec);
}

} // namespace ginv::strata
