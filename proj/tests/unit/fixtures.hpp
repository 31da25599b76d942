#pragma once

#include <vector>

#include "ginv/lie_data.hpp"
#include "../oracles.hpp"

// Small groups with their real actions, given twice: as a GroupSpec and as
// the oracle's explicit variable weight list.
struct Fixture {
    const char *name;
    ginv::GroupSpec spec;
    std::vector<oracle::Weight> vars;
};

inline std::vector<Fixture> molien_fixtures()
{
    using ginv::WeightVector;
    std::vector<Fixture> out;
    // U(1) on C realified.
    out.push_back({"U(1) on C", ginv::make_unitary(1).with_complex_representation({WeightVector{1}}), {{1}, {-1}}});
    // U(2) on C^2 + conj(C^2) realified.
    out.push_back({"U(2) on C2+C2*",
                   ginv::make_unitary(2).with_complex_representation(
                       {WeightVector{1, 0}, WeightVector{0, 1}, WeightVector{-1, 0}, WeightVector{0, -1}}),
                   {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}});
    // SO(4) on C^4 realified.
    out.push_back({"SO(4) on C4",
                   ginv::make_so_even(2).with_complex_representation(
                       {WeightVector{1, 0}, WeightVector{-1, 0}, WeightVector{0, 1}, WeightVector{0, -1}}),
                   {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}});
    // Sp(1) on H = C^2 (real dimension 4, no doubling).
    out.push_back({"Sp(1) on H",
                   ginv::make_symplectic(1).with_ambient_weights({{WeightVector{1}, 2}, {WeightVector{-1}, 2}}),
                   {{1}, {1}, {-1}, {-1}}});
    return out;
}

inline std::vector<oracle::Weight> as_oracle(const std::vector<ginv::WeightVector> &ws)
{
    std::vector<oracle::Weight> out;
    for (const auto &w : ws) out.push_back(w.exponents());
    return out;
}
