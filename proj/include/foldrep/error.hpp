#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace foldrep {

/// Short scientific rendering of a deviation for error messages.
inline std::string format_deviation(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

enum class ErrorKind {
  InvalidMatrix,
  NotHyperbolic,
  NotCentral,
  AmbiguousRounding,
  BoundaryNotHyperbolic,
  RelatorViolated,
  InvalidBranch,
  NonPositiveLength,
  NotGeometric,
  AlreadyGeometric,
  NotElementary,
  UnmatchedSlot,
  Disconnected,
  BadCount,
  BadIndex,
  NotHyperbolicCuff,
  ExtremalClass,
  BudgetExceeded,
  PresentationMismatch,
  DegenerateViolation,
  BadParameter,
  InvalidInput,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::AmbiguousRounding: return "AmbiguousRounding";
    case ErrorKind::BoundaryNotHyperbolic: return "BoundaryNotHyperbolic";
    case ErrorKind::RelatorViolated: return "RelatorViolated";
    case ErrorKind::InvalidBranch: return "InvalidBranch";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::AlreadyGeometric: return "AlreadyGeometric";
    case ErrorKind::NotElementary: return "NotElementary";
    case ErrorKind::UnmatchedSlot: return "UnmatchedSlot";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadCount: return "BadCount";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotHyperbolicCuff: return "NotHyperbolicCuff";
    case ErrorKind::ExtremalClass: return "ExtremalClass";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::PresentationMismatch: return "PresentationMismatch";
    case ErrorKind::DegenerateViolation: return "DegenerateViolation";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every library failure is reported through this exception; `kind()` lets
/// callers branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace foldrep
