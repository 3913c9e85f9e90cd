#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

/// Thrown when an enumeration would exceed the configured cylinder budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string what, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(std::move(what)), requested_(requested), limit_(limit) {}

  std::uint64_t requested() const { return requested_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// Spec-file syntax or semantic error; message carries source:line and the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message,
             const std::string& token = "");

  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

}  // namespace cantor
