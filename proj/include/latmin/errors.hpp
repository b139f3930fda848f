#pragma once

#include <stdexcept>
#include <string>

namespace latmin {

// Error hierarchy shared by every module. The CLI maps these onto exit
// codes: DomainError (and its refinements) -> 1, InternalError -> 2,
// SizeError / BudgetError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input: out-of-range parameter, malformed sequence, bad profile.
struct DomainError : Error {
    using Error::Error;
};

// A documented invariant failed; indicates a bug, not a user mistake.
struct InternalError : Error {
    using Error::Error;
};

// Instance is too large for an exhaustive routine (e.g. brute-force chains).
struct SizeError : Error {
    using Error::Error;
};

// Enumeration work exceeded the configured budget cap.
struct BudgetError : Error {
    using Error::Error;
};

// Quadratic form is not positive definite.
struct DefinitenessError : DomainError {
    using DomainError::DomainError;
};

// Matrix/vector dimensions do not match the expected rank.
struct DimensionError : DomainError {
    using DomainError::DomainError;
};

} // namespace latmin
