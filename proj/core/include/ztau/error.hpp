#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ztau {

/// Machine-readable failure categories. Every module error carries one.
enum class ErrorCode {
  NonPositiveRational,
  FactorizationLimit,
  TermBudgetExceeded,
  NotRealSymmetric,
  DimensionTooLarge,
  WeightNearZero,
  NotAnalytic,
  DuplicateIndices,
  ToleranceUnachievable,
  NotOuter,
  SupportConditionViolated,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ztau
