#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace segame {

using NodeId = std::uint32_t;
using CommunityId = std::uint32_t;

inline constexpr CommunityId kNoCommunity = std::numeric_limits<CommunityId>::max();

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a semantic precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity is undefined for the given arguments (e.g. log of zero volume).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace segame
