#include "zelcalc/errors.hpp"

namespace zelcalc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySegment: return "EmptySegment";
    case ErrorCode::LatticeMismatch: return "LatticeMismatch";
    case ErrorCode::UnknownLine: return "UnknownLine";
    case ErrorCode::NotSelfDualLine: return "NotSelfDualLine";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotRigid: return "NotRigid";
    case ErrorCode::NotALadder: return "NotALadder";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InconsistentPartners: return "InconsistentPartners";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySegment:
    case ErrorCode::LatticeMismatch:
    case ErrorCode::UnknownLine:
    case ErrorCode::SyntaxError:
    case ErrorCode::SchemaError:
    case ErrorCode::InconsistentPartners:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

std::string_view to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::NotProperLadder: return "NotProperLadder";
    case HypothesisKind::NotMutuallyUnlinked: return "NotMutuallyUnlinked";
  }
  return "Unknown";
}

}  // namespace zelcalc
