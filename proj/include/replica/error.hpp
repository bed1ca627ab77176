#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace replica {

enum class ErrorKind {
   UnsortedSupport,
   NonpositiveSupport,
   ProbOutOfRange,
   ProbSumMismatch,
   LengthMismatch,
   InvalidOrder,
   TimeOutOfRange,
   BudgetExceeded,
   ShapeMismatch,
   DegenerateDenominator,
   PreconditionViolated,
   UnknownSubcommand,
   MissingFlag,
   FileNotFound,
   ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every validation failure in the library is reported as an Error carrying
/// its kind; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
 public:
   Error(ErrorKind kind, const std::string& detail);

   ErrorKind kind() const noexcept { return kind_; }

 private:
   ErrorKind kind_;
};

}  // namespace replica
