#pragma once

#include <stdexcept>
#include <string>

namespace dyntomo {

// Violated preconditions (bad input, mismatched dimensions, invalid
// configuration). The CLI maps these to exit code 2.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failures (eigensolver non-convergence, invariant violations that
// indicate an upstream bug). The CLI maps these to exit code 3.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dyntomo
