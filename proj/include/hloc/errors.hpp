#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hloc {

// A violated precondition of a group-theoretic operation. The CLI maps
// these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by operations that need a nontrivial word (primitive roots,
// centralizers, root adjunction).
class IdentityWordError : public DomainError {
 public:
  explicit IdentityWordError(std::string const& what)
      : DomainError(what + ": the identity word is not allowed") {}
};

class LengthLimitExceeded : public DomainError {
 public:
  LengthLimitExceeded(std::size_t required, std::size_t limit)
      : DomainError("word length " + std::to_string(required) +
                    " exceeds the configured limit " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

// Malformed text input. Line and column are 1-based; the CLI maps these
// to exit code 2.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        message_(message),
        line_(line),
        column_(column) {}

  std::string const& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hloc
