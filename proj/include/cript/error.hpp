#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cript {

/// Malformed input text (bitmap files, code words). Exit status 2 at the CLI.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input is well-formed but violates a domain rule (invalid code word,
/// multi-component glyph). Exit status 1 at the CLI.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Realized curves intersect each other or themselves.
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace cript
