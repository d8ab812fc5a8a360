#include "pathideal/error.hpp"

namespace pathideal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TrimAmbiguous: return "TrimAmbiguous";
    case ErrorCode::BadFamilyParameters: return "BadFamilyParameters";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroIdeal: return "ZeroIdeal";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::NotEquigenerated: return "NotEquigenerated";
    case ErrorCode::NotAnAntichain: return "NotAnAntichain";
    case ErrorCode::DivisibilityHypothesisFails: return "DivisibilityHypothesisFails";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NUnsupported: return "nUnsupported";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

}  // namespace pathideal
