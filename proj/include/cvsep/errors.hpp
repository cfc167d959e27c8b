#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvsep {

// Base for every error raised by the library. The CLI maps the derived
// classes onto exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape/dimension mismatches and invalid dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A numerical precondition did not hold (non-Hermitian input, bad trace,
// non-normalized state, m = 0 for Duan, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A truncated construction lost more weight than the allowed tolerance,
// or a moment would read ladder powers the truncation cannot represent.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class OutputError : public Error {
 public:
  using Error::Error;
};

// Operator-language errors: lexing, parsing and lowering.
class DslError : public Error {
 public:
  DslError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  // Zero-based byte offset into the source text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class LexError : public DslError {
 public:
  using DslError::DslError;
};

class ParseError : public DslError {
 public:
  using DslError::DslError;
};

// Var[...] on an operator that is not Hermitian, division by an operator.
class LowerError : public DslError {
 public:
  using DslError::DslError;
};

}  // namespace cvsep
