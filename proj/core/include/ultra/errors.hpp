#ifndef ULTRA_ERRORS_HPP
#define ULTRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ultra {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition violations and unusable parameter combinations
/// (degenerate transforms, zero coefficients where forbidden, bad options).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure: divergent series, overflowing coefficients,
/// no converging representation for a requested branch.
struct EvaluationError : Error {
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

} // namespace ultra

#endif
