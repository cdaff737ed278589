#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novikov {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
  std::size_t line_;
  std::size_t column_;
};

/// A normal-form engine refused the presentation (orientation, confluence,
/// relator consistency) or ran out of its rewriting budget.
class EngineRejection : public Error {
 public:
  using Error::Error;
};

class QuotientError : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The element's minimal part is not a single monomial with a strictly
/// positive gap, so it has no inverse computable by a geometric series.
class StrictGapViolation : public Error {
 public:
  using Error::Error;
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class InconclusiveAtCutoff : public Error {
 public:
  using Error::Error;
};

class ZeroCharacter : public Error {
 public:
  using Error::Error;
};

}  // namespace novikov
