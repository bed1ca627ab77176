#include "replica/error.hpp"

namespace replica {

std::string_view to_string(ErrorKind kind) {
   switch (kind) {
      case ErrorKind::UnsortedSupport: return "UnsortedSupport";
      case ErrorKind::NonpositiveSupport: return "NonpositiveSupport";
      case ErrorKind::ProbOutOfRange: return "ProbOutOfRange";
      case ErrorKind::ProbSumMismatch: return "ProbSumMismatch";
      case ErrorKind::LengthMismatch: return "LengthMismatch";
      case ErrorKind::InvalidOrder: return "InvalidOrder";
      case ErrorKind::TimeOutOfRange: return "TimeOutOfRange";
      case ErrorKind::BudgetExceeded: return "BudgetExceeded";
      case ErrorKind::ShapeMismatch: return "ShapeMismatch";
      case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
      case ErrorKind::PreconditionViolated: return "PreconditionViolated";
      case ErrorKind::UnknownSubcommand: return "UnknownSubcommand";
      case ErrorKind::MissingFlag: return "MissingFlag";
      case ErrorKind::FileNotFound: return "FileNotFound";
      case ErrorKind::ParseError: return "ParseError";
   }
   return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
   : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace replica
