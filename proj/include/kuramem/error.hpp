#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuramem {

enum class Errc {
  DimensionMismatch,
  InvalidPattern,
  AntipodalMemories,
  NegativeEpsilon,
  WrongMemoryCount,
  IsMemory,
  NotSymmetric,
  NotConverged,
  HypothesisViolated,
  DegenerateOverlap,
  NonFiniteState,
  OutOfRange,
  InvalidConfig,
  NoRetrieval,
  AmbiguousRetrieval,
  ParseError,
  RangeError,
  ParameterOutOfRange,
  IoError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Pattern-file syntax error. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace kuramem
