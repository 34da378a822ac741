#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jk {

/// Operand shapes do not fit (non-square input, length mismatch, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The supplied factor data contradicts the matrix: f is not a factor with the
/// stated multiplicity, f is reducible, or a multiplicity identity failed.
/// `phase` names the pipeline stage that detected it.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(std::string phase, const std::string& what)
      : std::runtime_error(phase + ": " + what), phase_(std::move(phase)) {}

  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string phase_;
};

}  // namespace jk
