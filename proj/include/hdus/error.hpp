#pragma once
// Error types thrown by the hdus library.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands (or an operand and a space) disagree on dimensionality.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Cosine or cleanup probe against an all-zero vector: the angle is undefined.
// Usually means a semantic vector that was never updated.
class ZeroVectorError : public Error {
 public:
  using Error::Error;
};

// Label sparsity k too large for the dimensionality (needs 2k <= d).
class SparsityError : public Error {
 public:
  using Error::Error;
};

// A feature key was resolved against the wrong kind of item
// (label lookup on a permutation namespace or vice versa).
class NamespaceError : public Error {
 public:
  using Error::Error;
};

// An UtteranceRecord violates its own invariants (empty tokens, role head
// not among the tokens, pos label count mismatch).
class RecordError : public Error {
 public:
  using Error::Error;
};

// Two records with the same id in one store build.
class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration, or a query whose seed/dimension/feature mask does
// not match the store it is run against.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input line or corrupt store file. line() is 1-based, 0 = n/a.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hdus
