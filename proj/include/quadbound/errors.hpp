#pragma once

#include <stdexcept>
#include <string>

namespace quadbound {

/// Raised when an operation's preconditions are violated (bad N, r, lambda, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside [-1, 1] beyond the admitted round-off tolerance.
class DomainError : public ParameterError {
public:
    explicit DomainError(const std::string& what) : ParameterError(what) {}
};

/// An iterative method hit its iteration or subdivision cap.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A verification suite found a violated identity or bound.
class VerificationFailure : public std::runtime_error {
public:
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Process exit codes used by the command-line front end.
enum class ExitCode : int {
    success = 0,
    parameter_error = 2,
    verification_failure = 3,
    non_convergence = 4,
};

} // namespace quadbound
