#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace addbase {

enum class ErrorCode {
  EmptyModuli,
  InvalidModulus,
  OrderOverflow,
  EmptySet,
  NotASubgroup,
  NoSymmetricTransversal,
  GroupMismatch,
  QuotientMismatch,
  BadWindow,
  NotABasis,
  TooSmall,
  BudgetExceeded,
  PreconditionViolated,
  NotOrderTwo,
  BadParameters,
  TruncationTooSmall,
  DegenerateD,
  NoWitnessFound,
  ParseError,
  UnknownSuite,
  VerificationFailed,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyModuli: return "EmptyModuli";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NoSymmetricTransversal: return "NoSymmetricTransversal";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::QuotientMismatch: return "QuotientMismatch";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::DegenerateD: return "DegenerateD";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Process exit code for a failure of the given kind:
/// 2 parse/validation, 3 mathematical precondition, 4 budget, 5 verification.
inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet:
    case ErrorCode::NotASubgroup:
    case ErrorCode::NoSymmetricTransversal:
    case ErrorCode::NotABasis:
    case ErrorCode::TooSmall:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotOrderTwo:
    case ErrorCode::NoWitnessFound:
      return 3;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::OrderOverflow:
      return 4;
    case ErrorCode::VerificationFailed:
      return 5;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace addbase
