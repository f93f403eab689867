#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace altlink {

enum class ErrorCode {
  DuplicateDart = 1,
  UnpairedDart,
  WrongDegree,
  Disconnected,
  NonPlanar,
  BadSize,
  UnknownVertex,
  SyntaxError,
  IoError,
  RangeError,
  CyclicGroupHasNoEnds,
  NotComponentCrossing,
  NotPrime,
  NotReduced,
  BadIncidence,
  NotFullProper,
  CyclicGroup,
  NotOtsTriangle,
  NotTwoGroup,
  TriangleTouchesTwoGroup,
  TriangleNotInRegion,
  NotAdjacentInCondensation,
  NotLoner,
  NotAligned,
  LabelNormalizationImpossible,
  SearchExhausted,
  SizeTooLarge,
  MismatchedSize,
  DepthLimitHit,
  MirrorMismatch,
  BadTrace,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace altlink
