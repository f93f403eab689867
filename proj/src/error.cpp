#include "altlink/error.hpp"

namespace altlink {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateDart: return "DuplicateDart";
    case ErrorCode::UnpairedDart: return "UnpairedDart";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::CyclicGroupHasNoEnds: return "CyclicGroupHasNoEnds";
    case ErrorCode::NotComponentCrossing: return "NotComponentCrossing";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::BadIncidence: return "BadIncidence";
    case ErrorCode::NotFullProper: return "NotFullProper";
    case ErrorCode::CyclicGroup: return "CyclicGroup";
    case ErrorCode::NotOtsTriangle: return "NotOtsTriangle";
    case ErrorCode::NotTwoGroup: return "NotTwoGroup";
    case ErrorCode::TriangleTouchesTwoGroup: return "TriangleTouchesTwoGroup";
    case ErrorCode::TriangleNotInRegion: return "TriangleNotInRegion";
    case ErrorCode::NotAdjacentInCondensation: return "NotAdjacentInCondensation";
    case ErrorCode::NotLoner: return "NotLoner";
    case ErrorCode::NotAligned: return "NotAligned";
    case ErrorCode::LabelNormalizationImpossible: return "LabelNormalizationImpossible";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::MismatchedSize: return "MismatchedSize";
    case ErrorCode::DepthLimitHit: return "DepthLimitHit";
    case ErrorCode::MirrorMismatch: return "MirrorMismatch";
    case ErrorCode::BadTrace: return "BadTrace";
  }
  return "Unknown";
}

}  // namespace altlink
