#ifndef MAXDEG_ERRORS_HPP
#define MAXDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxdeg {

/// Thrown when an exponential-time routine is asked for an input larger
/// than its size guard. Callers may raise the guard explicitly.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a requested quantity is an open problem rather than a bad
/// input (e.g. exact values that are only known for small parameters).
/// Kept distinct from std::invalid_argument so frontends can report
/// "unknown" honestly instead of "error".
class unknown_value_error : public std::runtime_error {
public:
    explicit unknown_value_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when an algorithm detects a violated internal invariant.
/// Seeing this means a bug, not a bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace maxdeg

#endif // MAXDEG_ERRORS_HPP
