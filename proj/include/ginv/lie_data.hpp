#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ginv {

/// Integer coordinates of a character of a maximal torus. Also used as the
/// exponent vector of a Laurent monomial.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::size_t rank) : exps_(rank, 0) {}
    explicit WeightVector(std::vector<int> exps) : exps_(std::move(exps)) {}
    WeightVector(std::initializer_list<int> exps) : exps_(exps) {}

    static WeightVector unit(std::size_t rank, std::size_t i, int value = 1);

    std::size_t rank() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int &operator[](std::size_t i) { return exps_[i]; }
    const std::vector<int> &exponents() const { return exps_; }

    bool is_zero() const;
    int max_abs() const;

    WeightVector operator-() const;
    WeightVector &operator+=(const WeightVector &o);
    WeightVector &operator-=(const WeightVector &o);
    friend WeightVector operator+(WeightVector a, const WeightVector &b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector &b) { return a -= b; }
    friend WeightVector operator*(int s, WeightVector a);

    // Concatenation of torus coordinates (product groups).
    WeightVector concat(const WeightVector &o) const;

    friend bool operator==(const WeightVector &, const WeightVector &) = default;
    friend auto operator<=>(const WeightVector &, const WeightVector &) = default;

    std::string to_string() const;

private:
    std::vector<int> exps_;
};

struct WeightVectorHash {
    std::size_t operator()(const WeightVector &w) const noexcept;
};

struct RootDatum {
    std::vector<WeightVector> roots;
    std::uint64_t weyl_order = 1;
};

enum class Family { Unitary, Symplectic, SOEven };

std::string family_name(Family f);
Family family_from_name(const std::string &name);

struct Factor {
    Family family;
    int rank; // n for U(n), m for Sp(m), k for SO(2k)

    int dimension() const;
    friend bool operator==(const Factor &, const Factor &) = default;
};

struct WeightMultiplicity {
    WeightVector weight;
    int multiplicity = 1;
    friend bool operator==(const WeightMultiplicity &, const WeightMultiplicity &) = default;
};

/// A connected compact group given by classical factors, together with the
/// weights of its action on an ambient real space (complexified).
class GroupSpec {
public:
    GroupSpec() = default;

    const std::vector<Factor> &factors() const { return factors_; }
    std::size_t rank() const { return rank_; }
    const RootDatum &root_datum() const { return roots_; }
    const std::vector<WeightVector> &roots() const { return roots_.roots; }
    std::uint64_t weyl_order() const { return roots_.weyl_order; }
    int dimension() const;
    // Weyl integration over the maximal torus needs a connected group; every
    // constructible spec is connected.
    bool connected() const { return true; }

    const std::vector<WeightMultiplicity> &ambient_weights() const { return ambient_; }
    bool has_ambient_weights() const { return !ambient_.empty(); }
    int ambient_real_dim() const;
    // Ambient weights expanded by multiplicity.
    std::vector<WeightVector> ambient_weight_list() const;

    // Weights of a complex representation into U(N), one per diagonal entry.
    // Present for specs built from a complex representation; used as the
    // torus map into SU(N) for irrep invariant counts.
    const std::vector<WeightVector> &complex_weights() const { return complex_; }
    bool has_complex_weights() const { return !complex_.empty(); }

    // Attaches the realification of a complex representation: ambient weights
    // are the given weights together with their negatives.
    GroupSpec with_complex_representation(std::vector<WeightVector> weights) const;
    // Attaches an explicit real action by its complexified weights.
    GroupSpec with_ambient_weights(std::vector<WeightMultiplicity> weights) const;

    // Throws InvalidSpec if the ambient weights violate the realification
    // invariants (rank, closure under negation).
    void validate() const;

    friend GroupSpec product(const GroupSpec &a, const GroupSpec &b);
    friend GroupSpec make_unitary(int n);
    friend GroupSpec make_symplectic(int m);
    friend GroupSpec make_so_even(int k);

private:
    std::vector<Factor> factors_;
    std::size_t rank_ = 0;
    RootDatum roots_;
    std::vector<WeightMultiplicity> ambient_;
    std::vector<WeightVector> complex_;
};

GroupSpec make_unitary(int n);
GroupSpec make_symplectic(int m);
GroupSpec make_so_even(int k);
GroupSpec product(const GroupSpec &a, const GroupSpec &b);

/// Standard complex representation weights: U(n) on C^n, Sp(m) on C^{2m},
/// SO(2k) on C^{2k}. For products the factors' weights are zero-padded and
/// concatenated (direct sum of the standard representations).
std::vector<WeightVector> standard_weights(const GroupSpec &g);

/// The isospectral pair for odd n >= 3: U(n) via st + st*, and
/// Sp(m) x SO(2n-2m) via st' (x) id + id (x) st'', m = (n-1)/2, both acting
/// on R^{4n} = C^{2n}.
std::pair<GroupSpec, GroupSpec> isospectral_pair(int n);

} // namespace ginv
