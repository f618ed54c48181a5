#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

/// Bad user input: a spec field, a flag, or a precondition violation.
/// The message names the offending field.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure at runtime: non-convergence, degenerate gap,
/// flat channel, amplitude outside the unitarity guard.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal invariant broke (e.g. cross-sector coupling in the
/// full-space oracle). Signals a construction bug, not bad input.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spinchain
