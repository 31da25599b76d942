#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Bad scalar argument (group rank, degree cap, odd n, partition length).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operands that cannot be combined (rank mismatch, malformed vectors).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A GroupSpec that does not satisfy the requirements of the requested operation.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Singular values fell inside the ambiguity band of the rank cutoff.
class IndeterminateRank : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The finite-difference stencil crossed a change of orbit type.
class StencilDegeneracy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ginv
