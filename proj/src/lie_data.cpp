#include "ginv/lie_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

std::uint64_t factorial(int n)
{
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

WeightVector pad(const WeightVector &w, std::size_t before, std::size_t after)
{
    std::vector<int> e(before, 0);
    e.insert(e.end(), w.exponents().begin(), w.exponents().end());
    e.resize(e.size() + after, 0);
    return WeightVector(std::move(e));
}

} // namespace

WeightVector WeightVector::unit(std::size_t rank, std::size_t i, int value)
{
    WeightVector w(rank);
    w[i] = value;
    return w;
}

bool WeightVector::is_zero() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

int WeightVector::max_abs() const
{
    int m = 0;
    for (int e : exps_) m = std::max(m, std::abs(e));
    return m;
}

WeightVector WeightVector::operator-() const
{
    WeightVector r(*this);
    for (int &e : r.exps_) e = -e;
    return r;
}

WeightVector &WeightVector::operator+=(const WeightVector &o)
{
    if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += o.exps_[i];
    return *this;
}

WeightVector &WeightVector::operator-=(const WeightVector &o)
{
    if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] -= o.exps_[i];
    return *this;
}

WeightVector operator*(int s, WeightVector a)
{
    for (int &e : a.exps_) e *= s;
    return a;
}

WeightVector WeightVector::concat(const WeightVector &o) const
{
    std::vector<int> e(exps_);
    e.insert(e.end(), o.exps_.begin(), o.exps_.end());
    return WeightVector(std::move(e));
}

std::string WeightVector::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
    os << ')';
    return os.str();
}

std::size_t WeightVectorHash::operator()(const WeightVector &w) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : w.exponents()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::Unitary: return "U";
    case Family::Symplectic: return "Sp";
    case Family::SOEven: return "SOeven";
    }
    return "?";
}

Family family_from_name(const std::string &name)
{
    if (name == "U") return Family::Unitary;
    if (name == "Sp") return Family::Symplectic;
    if (name == "SOeven" || name == "SO") return Family::SOEven;
    throw InvalidSpec("unknown group family '" + name + "'");
}

int Factor::dimension() const
{
    switch (family) {
    case Family::Unitary: return rank * rank;
    case Family::Symplectic: return rank * (2 * rank + 1);
    case Family::SOEven: return rank * (2 * rank - 1);
    }
    return 0;
}

int GroupSpec::dimension() const
{
    int d = 0;
    for (const auto &f : factors_) d += f.dimension();
    return d;
}

int GroupSpec::ambient_real_dim() const
{
    int d = 0;
    for (const auto &w : ambient_) d += w.multiplicity;
    return d;
}

std::vector<WeightVector> GroupSpec::ambient_weight_list() const
{
    std::vector<WeightVector> out;
    for (const auto &w : ambient_)
        for (int i = 0; i < w.multiplicity; ++i) out.push_back(w.weight);
    return out;
}

GroupSpec GroupSpec::with_complex_representation(std::vector<WeightVector> weights) const
{
    std::map<WeightVector, int> counts;
    for (const auto &w : weights) {
        if (w.rank() != rank_) throw InvalidSpec("complex weight has wrong rank");
        ++counts[w];
        ++counts[-w];
    }
    std::vector<WeightMultiplicity> ambient;
    for (auto &[w, m] : counts) ambient.push_back({w, m});
    GroupSpec g = with_ambient_weights(std::move(ambient));
    g.complex_ = std::move(weights);
    return g;
}

GroupSpec GroupSpec::with_ambient_weights(std::vector<WeightMultiplicity> weights) const
{
    GroupSpec g(*this);
    g.ambient_ = std::move(weights);
    g.complex_.clear();
    g.validate();
    return g;
}

void GroupSpec::validate() const
{
    std::map<WeightVector, int> counts;
    for (const auto &w : ambient_) {
        if (w.weight.rank() != rank_)
            throw InvalidSpec("ambient weight " + w.weight.to_string() + " has wrong rank");
        if (w.multiplicity <= 0) throw InvalidSpec("ambient weight multiplicity must be positive");
        counts[w.weight] += w.multiplicity;
    }
    for (const auto &[w, m] : counts) {
        auto it = counts.find(-w);
        if (it == counts.end() || it->second != m)
            throw InvalidSpec("ambient weights not closed under negation at " + w.to_string());
    }
}

GroupSpec make_unitary(int n)
{
    if (n < 1) throw InvalidParameter("U(n) requires n >= 1");
    GroupSpec g;
    g.factors_ = {{Family::Unitary, n}};
    g.rank_ = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) g.roots_.roots.push_back(WeightVector::unit(n, i) - WeightVector::unit(n, j));
    g.roots_.weyl_order = factorial(n);
    return g;
}

GroupSpec make_symplectic(int m)
{
    if (m < 1) throw InvalidParameter("Sp(m) requires m >= 1");
    GroupSpec g;
    g.factors_ = {{Family::Symplectic, m}};
    g.rank_ = static_cast<std::size_t>(m);
    auto &roots = g.roots_.roots;
    for (int i = 0; i < m; ++i) {
        roots.push_back(WeightVector::unit(m, i, 2));
        roots.push_back(WeightVector::unit(m, i, -2));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    roots.push_back(WeightVector::unit(m, i, si) + WeightVector::unit(m, j, sj));
    g.roots_.weyl_order = (std::uint64_t{1} << m) * factorial(m);
    return g;
}

GroupSpec make_so_even(int k)
{
    if (k == 1)
        throw InvalidParameter("SO(2) is rejected by make_so_even; use make_unitary(1) for circle factors");
    if (k < 2) throw InvalidParameter("SO(2k) requires k >= 2");
    GroupSpec g;
    g.factors_ = {{Family::SOEven, k}};
    g.rank_ = static_cast<std::size_t>(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1})
                    g.roots_.roots.push_back(WeightVector::unit(k, i, si) + WeightVector::unit(k, j, sj));
    g.roots_.weyl_order = (std::uint64_t{1} << (k - 1)) * factorial(k);
    return g;
}

GroupSpec product(const GroupSpec &a, const GroupSpec &b)
{
    GroupSpec g;
    g.factors_ = a.factors_;
    g.factors_.insert(g.factors_.end(), b.factors_.begin(), b.factors_.end());
    g.rank_ = a.rank_ + b.rank_;
    for (const auto &r : a.roots_.roots) g.roots_.roots.push_back(pad(r, 0, b.rank_));
    for (const auto &r : b.roots_.roots) g.roots_.roots.push_back(pad(r, a.rank_, 0));
    g.roots_.weyl_order = a.roots_.weyl_order * b.roots_.weyl_order;
    // Direct sum of the two actions when both carry one.
    if (a.has_ambient_weights() || b.has_ambient_weights()) {
        for (const auto &w : a.ambient_) g.ambient_.push_back({pad(w.weight, 0, b.rank_), w.multiplicity});
        for (const auto &w : b.ambient_) g.ambient_.push_back({pad(w.weight, a.rank_, 0), w.multiplicity});
    }
    if (a.has_complex_weights() && b.has_complex_weights()) {
        for (const auto &w : a.complex_) g.complex_.push_back(pad(w, 0, b.rank_));
        for (const auto &w : b.complex_) g.complex_.push_back(pad(w, a.rank_, 0));
    }
    return g;
}

std::vector<WeightVector> standard_weights(const GroupSpec &g)
{
    std::vector<WeightVector> out;
    std::size_t offset = 0;
    const std::size_t rank = g.rank();
    for (const auto &f : g.factors()) {
        const auto r = static_cast<std::size_t>(f.rank);
        for (std::size_t i = 0; i < r; ++i) {
            auto e = WeightVector::unit(rank, offset + i);
            out.push_back(e);
            if (f.family != Family::Unitary) out.push_back(-e);
        }
        offset += r;
    }
    return out;
}

std::pair<GroupSpec, GroupSpec> isospectral_pair(int n)
{
    if (n < 3 || n % 2 == 0) throw InvalidParameter("isospectral_pair requires an odd n >= 3");
    const int m = (n - 1) / 2;
    const int k = n - m; // SO(2n - 2m) = SO(2k)

    GroupSpec h1 = make_unitary(n);
    std::vector<WeightVector> w1;
    for (int i = 0; i < n; ++i) w1.push_back(WeightVector::unit(n, i));
    for (int i = 0; i < n; ++i) w1.push_back(WeightVector::unit(n, i, -1));
    h1 = h1.with_complex_representation(std::move(w1));

    GroupSpec h2 = product(make_symplectic(m), make_so_even(k));
    h2 = h2.with_complex_representation(standard_weights(h2));
    return {std::move(h1), std::move(h2)};
}

} // namespace ginv
