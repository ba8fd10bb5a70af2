#pragma once

#include <stdexcept>
#include <string>

namespace qhkit {

enum class ErrorKind {
    Domain,
    DimensionMismatch,
    DegenerateVertex,
    InvalidCenter,
    NotRadial,
    DivisionDegenerate,
    InsufficientBoundary,
    BudgetExceeded,
    NonConvergence,
    MissingEta,
    Pole,
    Precondition,
    EmptySpace,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind lets callers (the
/// CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace qhkit
