#pragma once

#include <stdexcept>
#include <string>

namespace levymix {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration: unknown registry entries, malformed specs, missing
/// optional callables required by an operation. CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Argument outside the documented domain (s <= 0, y outside param_domain).
class ParameterError : public ConfigError {
 public:
  explicit ParameterError(const std::string& msg) : ConfigError(msg) {}
};

/// Integrability assumption (A1/A2) or operation precondition violated.
/// CLI exit code 2.
class AssumptionError : public Error {
 public:
  explicit AssumptionError(const std::string& msg) : Error(msg) {}
};

/// Numerical failure: quadrature non-convergence, inversion blow-up,
/// exhausted horizon. CLI exit code 3.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace levymix
