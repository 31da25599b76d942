#include "ginv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "ginv/errors.hpp"
#include "ginv/parallel.hpp"

namespace ginv {

namespace {

BigInt divide_exact(const BigInt &num, std::uint64_t den, const char *what)
{
    BigInt q, r;
    boost::multiprecision::divide_qr(num, BigInt(den), q, r);
    if (r != 0) throw std::logic_error(std::string(what) + ": constant term not divisible by |W|");
    return q;
}

// Builds prod_j 1/(1 - q z^{mu_j}) through q^cap.
TruncatedSeries generating_series(const std::vector<WeightVector> &weights, std::size_t rank, std::size_t cap,
                                  int density_reach, bool prune)
{
    TruncatedSeries s = TruncatedSeries::one(rank, cap);
    for (std::size_t idx = 0; idx < weights.size(); ++idx) {
        s.multiply_geometric(weights[idx]);
        if (!prune) continue;
        int remaining = 0;
        for (std::size_t r = idx + 1; r < weights.size(); ++r) remaining = std::max(remaining, weights[r].max_abs());
        for (std::size_t j = 0; j <= cap; ++j) {
            const long bound = static_cast<long>(cap - j) * remaining + density_reach;
            LaurentPoly kept(rank);
            for (const auto &[e, c] : s[j].terms())
                if (e.max_abs() <= bound) kept.add_term(e, c);
            s[j] = std::move(kept);
        }
    }
    return s;
}

} // namespace

std::vector<BigInt> molien_series(const GroupSpec &g, std::size_t degree_cap, MolienOptions opts)
{
    if (!g.has_ambient_weights()) throw InvalidSpec("molien_series: group has no ambient weights attached");
    if (!g.connected()) throw InvalidSpec("molien_series: Weyl integration needs a connected group");
    g.validate();

    const auto weights = g.ambient_weight_list();
    const LaurentPoly density = weyl_density(g.roots(), g.rank());
    const int reach = density.max_abs_exponent();
    const TruncatedSeries s = generating_series(weights, g.rank(), degree_cap, reach, opts.prune);

    int w = 0;
    for (const auto &mu : weights) w = std::max(w, mu.max_abs());
    for (std::size_t k = 0; k <= degree_cap; ++k)
        if (s[k].max_abs_exponent() > static_cast<int>(k) * w)
            throw std::logic_error("molien_series: exponent bound violated at degree " + std::to_string(k));

    return parallel_map<BigInt>(degree_cap + 1, [&](std::size_t k) {
        return divide_exact(constant_term_of_product(density, s[k]), g.weyl_order(), "molien_series");
    });
}

HarmonicSpectrum spectrum_from_hilbert(int sphere_dim, std::vector<BigInt> hilbert)
{
    HarmonicSpectrum out;
    out.sphere_dim = sphere_dim;
    for (std::size_t k = 0; k < hilbert.size(); ++k) {
        BigInt m = hilbert[k];
        if (k >= 2) m -= hilbert[k - 2];
        if (m < 0)
            throw std::logic_error("harmonic multiplicity negative at degree " + std::to_string(k));
        const auto kk = static_cast<std::int64_t>(k);
        out.entries.push_back({k, kk * (kk + sphere_dim - 1), std::move(m)});
    }
    out.hilbert = std::move(hilbert);
    return out;
}

HarmonicSpectrum harmonic_spectrum(const GroupSpec &g, std::size_t degree_cap, MolienOptions opts)
{
    return spectrum_from_hilbert(g.ambient_real_dim() - 1, molien_series(g, degree_cap, opts));
}

Partition::Partition(std::vector<int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw InvalidParameter("partition parts must be non-negative");
        if (i > 0 && parts[i] > parts[i - 1]) throw InvalidParameter("partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

int Partition::boxes() const
{
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++c[static_cast<std::size_t>(i)];
    return Partition(std::move(c));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

std::vector<Partition> partitions_up_to(int max_boxes, std::size_t max_length)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() == max_length) return;
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    for (int n = 0; n <= max_boxes; ++n) rec(n, n);
    return out;
}

namespace {

// det of an l x l matrix of Laurent polynomials by Laplace expansion along
// rows, memoized on the set of columns still available.
LaurentPoly determinant(const std::vector<std::vector<LaurentPoly>> &m, std::size_t rank)
{
    const std::size_t l = m.size();
    if (l == 0) return LaurentPoly::constant(rank, 1);
    if (l > 20) throw InvalidParameter("determinant: matrix too large");
    std::vector<std::optional<LaurentPoly>> memo(std::size_t{1} << l);
    std::function<LaurentPoly(std::size_t, std::size_t)> minor = [&](std::size_t row, std::size_t cols) -> LaurentPoly {
        if (row == l) return LaurentPoly::constant(rank, 1);
        if (memo[cols]) return *memo[cols];
        LaurentPoly acc(rank);
        int sign = 1;
        for (std::size_t c = 0; c < l; ++c) {
            if (!(cols & (std::size_t{1} << c))) continue;
            if (!m[row][c].is_zero()) {
                LaurentPoly term = m[row][c] * minor(row + 1, cols & ~(std::size_t{1} << c));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        memo[cols] = acc;
        return acc;
    };
    return minor(0, (std::size_t{1} << l) - 1);
}

} // namespace

LaurentPoly schur_character(const Partition &lambda, const std::vector<WeightVector> &torus_map, std::size_t rank)
{
    for (const auto &w : torus_map)
        if (w.rank() != rank) throw InvalidInput("torus map weight has wrong rank");
    const Partition conj = lambda.conjugate();
    const bool use_elementary = conj.length() < lambda.length();
    const Partition &shape = use_elementary ? conj : lambda;
    const std::size_t l = shape.length();
    if (l == 0) return LaurentPoly::constant(rank, 1);

    const auto cap = static_cast<std::size_t>(shape.parts().front()) + l;
    TruncatedSeries gen = TruncatedSeries::one(rank, cap);
    for (const auto &w : torus_map) {
        if (use_elementary)
            gen.multiply_linear(w);
        else
            gen.multiply_geometric(w);
    }

    std::vector<std::vector<LaurentPoly>> m(l, std::vector<LaurentPoly>(l, LaurentPoly(rank)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            const long idx = static_cast<long>(shape.parts()[i]) - static_cast<long>(i) + static_cast<long>(j);
            if (idx >= 0 && static_cast<std::size_t>(idx) <= cap) m[i][j] = gen[static_cast<std::size_t>(idx)];
        }
    return determinant(m, rank);
}

BigInt invariant_dim_in_irrep(const Partition &lambda, const GroupSpec &h, const std::vector<WeightVector> &torus_map)
{
    if (torus_map.empty()) throw InvalidSpec("invariant_dim_in_irrep: empty torus map");
    if (lambda.length() + 1 > torus_map.size())
        throw InvalidParameter("partition " + lambda.to_string() + " has too many parts for SU(" +
                               std::to_string(torus_map.size()) + ")");
    const LaurentPoly chi = schur_character(lambda, torus_map, h.rank());
    const LaurentPoly density = weyl_density(h.roots(), h.rank());
    return divide_exact(constant_term_of_product(chi, density), h.weyl_order(), "invariant_dim_in_irrep");
}

BigInt invariant_dim_in_irrep(const Partition &lambda, const GroupSpec &h)
{
    if (!h.has_complex_weights()) throw InvalidSpec("invariant_dim_in_irrep: group has no complex representation");
    return invariant_dim_in_irrep(lambda, h, h.complex_weights());
}

SpectrumLevels levels(const HarmonicSpectrum &s)
{
    SpectrumLevels out;
    out.sphere_dim = s.sphere_dim;
    for (const auto &e : s.entries) {
        out.complete_through = std::max(out.complete_through, e.eigenvalue);
        if (e.multiplicity != 0) {
            out.multiplicity[e.eigenvalue] += e.multiplicity;
            out.degree_of[e.eigenvalue] = e.degree;
        }
    }
    return out;
}

ComparisonReport spectra_equal(const SpectrumLevels &a, const SpectrumLevels &b)
{
    ComparisonReport report;
    report.compared_through = std::min(a.complete_through, b.complete_through);
    std::map<std::int64_t, bool> eigenvalues;
    for (const auto &[l, m] : a.multiplicity) eigenvalues[l] = true;
    for (const auto &[l, m] : b.multiplicity) eigenvalues[l] = true;
    for (const auto &[l, unused] : eigenvalues) {
        if (l > report.compared_through) break;
        auto ia = a.multiplicity.find(l);
        auto ib = b.multiplicity.find(l);
        BigInt ma = ia == a.multiplicity.end() ? BigInt(0) : ia->second;
        BigInt mb = ib == b.multiplicity.end() ? BigInt(0) : ib->second;
        if (ma == mb) continue;
        report.match = false;
        SpectrumMismatch mm{l, ma, mb, std::nullopt};
        if (a.sphere_dim && b.sphere_dim && *a.sphere_dim == *b.sphere_dim) {
            auto da = a.degree_of.find(l);
            auto db = b.degree_of.find(l);
            if (da != a.degree_of.end())
                mm.degree = da->second;
            else if (db != b.degree_of.end())
                mm.degree = db->second;
        }
        report.first_mismatch = std::move(mm);
        break;
    }
    return report;
}

ComparisonReport spectra_equal(const HarmonicSpectrum &a, const HarmonicSpectrum &b)
{
    return spectra_equal(levels(a), levels(b));
}

} // namespace ginv
