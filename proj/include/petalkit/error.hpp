#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace petalkit {

// Stable, machine-readable failure categories. The numeric values are part
// of the C API (see petalkit.h) and must not be reordered.
enum class ErrorCode : int {
  Ok = 0,
  NotAPermutation = 1,
  EvenLength = 2,
  OddLength = 3,
  InvalidRotation = 4,
  LevelOutOfRange = 5,
  PositionOutOfRange = 6,
  NotConsecutivePair = 7,
  SingletonUnderflow = 8,
  PairsNotFound = 9,
  BasepointPairInvolved = 10,
  NestingViolation = 11,
  BadLevels = 12,
  NotApplicable = 13,
  DoNotCross = 14,
  DegenerateDiagram = 15,
  InvariantMismatch = 16,
  BoundsExhausted = 17,
  IllegalMoveAtStep = 18,
  ReplayMismatchAtStep = 19,
  InvariantChangedAtStep = 20,
  InvalidConfig = 21,
  ParseError = 22,
  IoError = 23,
  Internal = 24,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace petalkit
