#include "petalkit/error.hpp"

namespace petalkit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::EvenLength: return "EvenLength";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::NotConsecutivePair: return "NotConsecutivePair";
    case ErrorCode::SingletonUnderflow: return "SingletonUnderflow";
    case ErrorCode::PairsNotFound: return "PairsNotFound";
    case ErrorCode::BasepointPairInvolved: return "BasepointPairInvolved";
    case ErrorCode::NestingViolation: return "NestingViolation";
    case ErrorCode::BadLevels: return "BadLevels";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DoNotCross: return "DoNotCross";
    case ErrorCode::DegenerateDiagram: return "DegenerateDiagram";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::BoundsExhausted: return "BoundsExhausted";
    case ErrorCode::IllegalMoveAtStep: return "IllegalMoveAtStep";
    case ErrorCode::ReplayMismatchAtStep: return "ReplayMismatchAtStep";
    case ErrorCode::InvariantChangedAtStep: return "InvariantChangedAtStep";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace petalkit
