#include "kuramem/error.hpp"

namespace kuramem {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidPattern: return "InvalidPattern";
    case Errc::AntipodalMemories: return "AntipodalMemories";
    case Errc::NegativeEpsilon: return "NegativeEpsilon";
    case Errc::WrongMemoryCount: return "WrongMemoryCount";
    case Errc::IsMemory: return "IsMemory";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotConverged: return "NotConverged";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::DegenerateOverlap: return "DegenerateOverlap";
    case Errc::NonFiniteState: return "NonFiniteState";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::NoRetrieval: return "NoRetrieval";
    case Errc::AmbiguousRetrieval: return "AmbiguousRetrieval";
    case Errc::ParseError: return "ParseError";
    case Errc::RangeError: return "RangeError";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(Errc::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

}  // namespace kuramem
