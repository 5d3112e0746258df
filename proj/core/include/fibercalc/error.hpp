#pragma once

#include <stdexcept>
#include <string>

namespace fibercalc {

// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
    Parse = 2,
    Domain = 3,
    Feasibility = 4,
    Verification = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Malformed scene input. line/column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(ErrorKind::Parse, what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A value violates a type invariant: GenusMismatch, NotPrimitive,
// UnknownCurve, NamespaceCollision, NotSymplectic, ...
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

// Infeasible stabilization counts, budget too small, bad ranges.
class FeasibilityError : public Error {
public:
    explicit FeasibilityError(const std::string& what) : Error(ErrorKind::Feasibility, what) {}
};

// An identity that holds as a theorem failed to verify. Always a bug.
class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

}  // namespace fibercalc
