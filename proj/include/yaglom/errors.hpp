#pragma once

#include <stdexcept>
#include <string>

namespace yaglom {

/// Precondition violated by the caller (bad residue, point outside the ball, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical procedure failed to reach its stated accuracy.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside the supported scale or an unknown option.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace yaglom
