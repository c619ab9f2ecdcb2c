#pragma once

#include <stdexcept>
#include <string>

namespace gossez {

/// Argument outside an operation's domain (m < 1, lambda <= 0, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gossez
