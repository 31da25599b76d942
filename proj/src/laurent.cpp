#include "ginv/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ginv/errors.hpp"

namespace ginv {

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt &c)
{
    LaurentPoly p(rank);
    p.add_term(WeightVector(rank), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const WeightVector &exps, const BigInt &c)
{
    LaurentPoly p(exps.rank());
    p.add_term(exps, c);
    return p;
}

BigInt LaurentPoly::coefficient(const WeightVector &exps) const
{
    auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const WeightVector &exps, const BigInt &c)
{
    if (exps.rank() != rank_) throw InvalidInput("monomial rank mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::max_abs_exponent() const
{
    int m = 0;
    for (const auto &[e, c] : terms_) m = std::max(m, e.max_abs());
    return m;
}

void LaurentPoly::check_rank(const LaurentPoly &o) const
{
    if (o.rank_ != rank_)
        throw InvalidInput("Laurent polynomial rank mismatch: " + std::to_string(rank_) + " vs " +
                           std::to_string(o.rank_));
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    check_rank(o);
    for (const auto &[e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o)
{
    check_rank(o);
    for (const auto &[e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const BigInt &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_) c *= s;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    for (auto &[e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_rank(b);
    LaurentPoly r(a.rank_);
    r.terms_.reserve(a.size() * b.size());
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b) { return a * b; }

LaurentPoly LaurentPoly::shifted(const WeightVector &shift) const
{
    if (shift.rank() != rank_) throw InvalidInput("shift rank mismatch");
    LaurentPoly r(rank_);
    r.terms_.reserve(terms_.size());
    for (const auto &[e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b)
{
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::map<WeightVector, BigInt> sorted(terms_.begin(), terms_.end());
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : sorted) {
        if (!first) os << " + ";
        first = false;
        os << c << "*z^" << e.to_string();
    }
    return os.str();
}

BigInt constant_term(const LaurentPoly &p) { return p.coefficient(WeightVector(p.rank())); }

BigInt constant_term_of_product(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a.rank() != b.rank()) throw InvalidInput("Laurent polynomial rank mismatch");
    const LaurentPoly &small = a.size() <= b.size() ? a : b;
    const LaurentPoly &large = a.size() <= b.size() ? b : a;
    BigInt sum = 0;
    for (const auto &[e, c] : small.terms()) {
        auto it = large.terms().find(-e);
        if (it != large.terms().end()) sum += c * it->second;
    }
    return sum;
}

TruncatedSeries::TruncatedSeries(std::size_t rank, std::size_t cap)
    : rank_(rank), coeffs_(cap + 1, LaurentPoly(rank))
{
}

TruncatedSeries TruncatedSeries::one(std::size_t rank, std::size_t cap)
{
    TruncatedSeries s(rank, cap);
    s.coeffs_[0] = LaurentPoly::constant(rank, 1);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.rank_ != b.rank_) throw InvalidInput("series rank mismatch");
    const std::size_t cap = std::min(a.cap(), b.cap());
    TruncatedSeries r(a.rank_, cap);
    for (std::size_t i = 0; i <= cap; ++i)
        for (std::size_t j = 0; i + j <= cap; ++j)
            if (!a.coeffs_[i].is_zero() && !b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
}

void TruncatedSeries::multiply_geometric(const WeightVector &mu)
{
    if (mu.rank() != rank_) throw InvalidInput("weight rank mismatch");
    // s / (1 - q z^mu): r_k = s_k + z^mu r_{k-1}.
    for (std::size_t k = 1; k < coeffs_.size(); ++k) coeffs_[k] += coeffs_[k - 1].shifted(mu);
}

void TruncatedSeries::multiply_linear(const WeightVector &mu)
{
    if (mu.rank() != rank_) throw InvalidInput("weight rank mismatch");
    for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) coeffs_[k] += coeffs_[k - 1].shifted(mu);
}

bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries geometric_factor(const WeightVector &mu, std::size_t cap)
{
    TruncatedSeries s(mu.rank(), cap);
    for (std::size_t k = 0; k <= cap; ++k)
        s[k] = LaurentPoly::monomial(static_cast<int>(k) * mu);
    return s;
}

LaurentPoly weyl_density(const std::vector<WeightVector> &roots, std::size_t rank)
{
    LaurentPoly p = LaurentPoly::constant(rank, 1);
    for (const auto &a : roots) {
        LaurentPoly f = LaurentPoly::constant(rank, 1);
        f.add_term(a, -1);
        p = p * f;
    }
    return p;
}

} // namespace ginv
