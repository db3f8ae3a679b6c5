#pragma once

#include <stdexcept>
#include <string>

namespace tropfw {

/// Malformed textual input (CSV cells, rational literals, point files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in incompatible dimensions, or a dimension is below the
/// supported floor (points need n >= 2, projections and searches need n >= 3).
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A linear program is structurally invalid (row length mismatch, empty
/// variable space, inconsistent bounds on construction).
class LpFormatError : public std::invalid_argument {
public:
    explicit LpFormatError(const std::string& what) : std::invalid_argument(what) {}
};

/// Internal solver guarantee broken. Thrown by exact self-checks that should
/// be unreachable; seeing one is a bug, not a user error.
class SolverInvariantError : public std::logic_error {
public:
    explicit SolverInvariantError(const std::string& what) : std::logic_error(what) {}
};

/// The mutual-exclusivity property of failed verification rounds was violated
/// in exact arithmetic. Unreachable for well-formed inputs; kept separate so
/// harness code can count (expected-zero) occurrences instead of aborting.
class ExclusivityViolationError : public std::logic_error {
public:
    explicit ExclusivityViolationError(const std::string& what) : std::logic_error(what) {}
};

}
