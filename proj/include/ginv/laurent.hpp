#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ginv/lie_data.hpp"

namespace ginv {

using BigInt = boost::multiprecision::cpp_int;

/// Multivariate Laurent polynomial with exact integer coefficients. Zero
/// coefficients are never stored; every exponent vector has length rank().
class LaurentPoly {
public:
    using TermMap = std::unordered_map<WeightVector, BigInt, WeightVectorHash>;

    explicit LaurentPoly(std::size_t rank = 0) : rank_(rank) {}

    static LaurentPoly constant(std::size_t rank, const BigInt &c);
    static LaurentPoly monomial(const WeightVector &exps, const BigInt &c = 1);

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }

    BigInt coefficient(const WeightVector &exps) const;
    void add_term(const WeightVector &exps, const BigInt &c);

    // Largest |exponent| over all stored monomials (0 for the zero polynomial).
    int max_abs_exponent() const;

    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const BigInt &s);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    LaurentPoly operator-() const;

    // Multiplies every exponent by the monomial z^shift.
    LaurentPoly shifted(const WeightVector &shift) const;

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

    std::string to_string() const;

private:
    void check_rank(const LaurentPoly &o) const;

    std::size_t rank_;
    TermMap terms_;
};

LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b);

BigInt constant_term(const LaurentPoly &p);

// CT(a * b) without forming the product.
BigInt constant_term_of_product(const LaurentPoly &a, const LaurentPoly &b);

/// Power series in q truncated after q^cap, with Laurent polynomial
/// coefficients.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t rank, std::size_t cap);

    static TruncatedSeries one(std::size_t rank, std::size_t cap);

    std::size_t rank() const { return rank_; }
    std::size_t cap() const { return coeffs_.size() - 1; }
    const LaurentPoly &operator[](std::size_t k) const { return coeffs_.at(k); }
    LaurentPoly &operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<LaurentPoly> &coefficients() const { return coeffs_; }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);

    // In-place multiplication by 1/(1 - q z^mu), truncated at cap().
    void multiply_geometric(const WeightVector &mu);
    // In-place multiplication by (1 + q z^mu).
    void multiply_linear(const WeightVector &mu);

    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b);

private:
    std::size_t rank_;
    std::vector<LaurentPoly> coeffs_;
};

/// Expansion of 1/(1 - q z^mu) through q^cap: the q^k coefficient is z^{k mu}.
TruncatedSeries geometric_factor(const WeightVector &mu, std::size_t cap);

/// prod over roots of (1 - z^alpha).
LaurentPoly weyl_density(const std::vector<WeightVector> &roots, std::size_t rank);

} // namespace ginv
