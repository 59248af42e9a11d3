#pragma once

#include <stdexcept>
#include <string>

namespace cisupport {

// Machine-readable error codes; the CLI serializes these into reports.
enum class ErrorCode {
  NotRegularSequence,
  NotInSquareOfMaxIdeal,
  InhomogeneousEntry,
  BudgetExceeded,
  NotMCM,
  MethodMismatch,
  DecompositionFailed,
  WindowTooShort,
  NotStabilized,
  ConstructionDegenerate,
  SearchExhausted,
  InvalidSplitting,
  ParseError,
  NameError,
  Internal,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotRegularSequence: return "NotRegularSequence";
    case ErrorCode::NotInSquareOfMaxIdeal: return "NotInSquareOfMaxIdeal";
    case ErrorCode::InhomogeneousEntry: return "InhomogeneousEntry";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotMCM: return "NotMCM";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::ConstructionDegenerate: return "ConstructionDegenerate";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidSplitting: return "InvalidSplitting";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NameError: return "NameError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  ParseError(int line, int col, const std::string& msg)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", col " + std::to_string(col) +
                  ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

}  // namespace cisupport
