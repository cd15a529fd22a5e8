#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace contourint {

using Complex = std::complex<double>;

// Error hierarchy. Every failure is an exception; nothing degrades silently.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BranchCutError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct NoConvergenceError : Error {
    using Error::Error;
};
struct RegionError : Error {
    using Error::Error;
};
struct QuadratureError : Error {
    using Error::Error;
};
struct EvaluationError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct SpecError : Error {
    using Error::Error;
};

struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw SpecError("Tolerance: abs_tol and rel_tol must be positive");
    }
};

struct QuadResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    long n_evals = 0;
};

}  // namespace contourint
