// Error hierarchy shared by the whole engine.
#pragma once

#include <stdexcept>
#include <string>

namespace parind {

// Violated precondition or invalid value for an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural invariant of a domain object failed to hold.
struct ValidationError : DomainError {
    using DomainError::DomainError;
};

// A symbol id (or similar key) is not registered.
struct LookupError : DomainError {
    using DomainError::DomainError;
};

// An externally supplied oracle broke its contract.
struct OracleError : DomainError {
    using DomainError::DomainError;
};

// Malformed textual input; `pos` is a 0-based offset into the input.
struct SyntaxError : std::runtime_error {
    std::size_t pos;
    SyntaxError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

} // namespace parind
