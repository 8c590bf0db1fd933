#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jc {

/// A precondition on a physical or numerical argument was not met.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A Fock-space cutoff is too small for the requested field state.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run configuration is malformed. Carries the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A conservation law or bound was violated while running a sweep.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jc
