#pragma once

#include <stdexcept>
#include <string>

namespace braidtrace {

// Malformed braid-word or polynomial text.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Generator index out of range for the rank, or ranks that do not match.
struct RankError : std::runtime_error {
  explicit RankError(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the operation's domain (e.g. rank below the minimum).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact division was required but the dividend is not a multiple.
struct NotDivisibleError : std::runtime_error {
  explicit NotDivisibleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace braidtrace
