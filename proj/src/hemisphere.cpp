#include "ginv/hemisphere.hpp"

#include <map>
#include <utility>

#include "ginv/errors.hpp"
#include "ginv/laurent.hpp"

namespace ginv {

namespace {

void monomials_of_degree(std::size_t vars, std::size_t degree, std::vector<int> &cur,
                         std::vector<std::vector<int>> &out)
{
    if (cur.size() + 1 == vars) {
        cur.push_back(static_cast<int>(degree));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::size_t a = 0; a <= degree; ++a) {
        cur.push_back(static_cast<int>(a));
        monomials_of_degree(vars, degree - a, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> monomials_of_degree(std::size_t vars, std::size_t degree)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    monomials_of_degree(vars, degree, cur, out);
    return out;
}

// Rank over Q of an integer matrix, by fraction-free elimination with row
// content removal.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows, std::size_t cols)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto &p = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const BigInt f = rows[r][c];
            const BigInt pc = p[c];
            BigInt content = 0;
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] = rows[r][k] * pc - p[k] * f;
                content = boost::multiprecision::gcd(content, rows[r][k]);
            }
            if (content > 1)
                for (std::size_t k = c; k < cols; ++k) rows[r][k] /= content;
        }
        ++rank;
    }
    return rank;
}

} // namespace

std::int64_t harmonic_parity_count(std::size_t vars, std::size_t degree, bool odd_parity)
{
    if (vars < 1) throw InvalidParameter("harmonic_parity_count requires at least one variable");
    auto keep = [&](const std::vector<int> &a) { return (a.back() % 2 == 1) == odd_parity; };

    std::vector<std::vector<int>> source;
    for (auto &a : monomials_of_degree(vars, degree))
        if (keep(a)) source.push_back(std::move(a));
    if (degree < 2) return static_cast<std::int64_t>(source.size());

    std::map<std::vector<int>, std::size_t> target_index;
    for (auto &a : monomials_of_degree(vars, degree - 2))
        if (keep(a)) target_index.emplace(std::move(a), target_index.size());

    // Laplacian: x^a -> sum_i a_i (a_i - 1) x^{a - 2 e_i}.
    std::vector<std::vector<BigInt>> rows(target_index.size(), std::vector<BigInt>(source.size(), 0));
    for (std::size_t col = 0; col < source.size(); ++col) {
        for (std::size_t i = 0; i < vars; ++i) {
            const int ai = source[col][i];
            if (ai < 2) continue;
            auto t = source[col];
            t[i] -= 2;
            rows[target_index.at(t)][col] += ai * (ai - 1);
        }
    }
    const std::size_t rank = exact_rank(std::move(rows), source.size());
    return static_cast<std::int64_t>(source.size() - rank);
}

NeumannSpectrum neumann_spectrum(std::size_t max_degree)
{
    NeumannSpectrum s;
    for (std::size_t j = 0; j <= max_degree; ++j) {
        const auto jj = static_cast<std::int64_t>(j);
        s.entries.push_back({j, 4 * jj * (jj + 2), harmonic_parity_count(4, j, false),
                             harmonic_parity_count(4, j, true)});
    }
    return s;
}

SpectrumLevels levels(const NeumannSpectrum &s)
{
    SpectrumLevels out;
    for (const auto &e : s.entries) {
        out.complete_through = std::max(out.complete_through, e.eigenvalue);
        if (e.multiplicity != 0) {
            out.multiplicity[e.eigenvalue] += e.multiplicity;
            out.degree_of[e.eigenvalue] = e.degree;
        }
    }
    return out;
}

} // namespace ginv
