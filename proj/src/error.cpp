#include "lmg/error.hpp"

namespace lmg {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotIntegerSpin: return "NotIntegerSpin";
    case ErrorCode::OverflowRisk: return "OverflowRisk";
    case ErrorCode::DegenerateAnisotropy: return "DegenerateAnisotropy";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::MethodUnavailable: return "MethodUnavailable";
  }
  return "Unknown";
}

}  // namespace lmg
