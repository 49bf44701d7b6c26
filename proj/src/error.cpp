#include "normlab/error.hpp"

namespace normlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PointOutOfRange: return "PointOutOfRange";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::EmptyDegree: return "EmptyDegree";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IndexTooLarge: return "IndexTooLarge";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::DoesNotNormalize: return "DoesNotNormalize";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SubgroupNotContained: return "SubgroupNotContained";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace normlab
