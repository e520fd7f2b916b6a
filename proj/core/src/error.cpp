#include "ztau/error.hpp"

namespace ztau {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveRational: return "NonPositiveRational";
    case ErrorCode::FactorizationLimit: return "FactorizationLimit";
    case ErrorCode::TermBudgetExceeded: return "TermBudgetExceeded";
    case ErrorCode::NotRealSymmetric: return "NotRealSymmetric";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::WeightNearZero: return "WeightNearZero";
    case ErrorCode::NotAnalytic: return "NotAnalytic";
    case ErrorCode::DuplicateIndices: return "DuplicateIndices";
    case ErrorCode::ToleranceUnachievable: return "ToleranceUnachievable";
    case ErrorCode::NotOuter: return "NotOuter";
    case ErrorCode::SupportConditionViolated: return "SupportConditionViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ztau
