#include "tiltwall/errors.hpp"

namespace tiltwall {

const char* name_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::RankZero: return "RankZero";
    case ErrorKind::ChOneZero: return "ChOneZero";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::VerticalLine: return "VerticalLine";
    case ErrorKind::NotInU: return "NotInU";
    case ErrorKind::DegenerateBG: return "DegenerateBG";
    case ErrorKind::NonIntegerEuler: return "NonIntegerEuler";
    case ErrorKind::ZeroClass: return "ZeroClass";
    case ErrorKind::DegenerateClass: return "DegenerateClass";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::UnboundedSearch: return "UnboundedSearch";
    case ErrorKind::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::NonPositiveC: return "NonPositiveC";
    case ErrorKind::SlopeMismatch: return "SlopeMismatch";
    case ErrorKind::NotBaseCase: return "NotBaseCase";
    case ErrorKind::NonMinusOneRank: return "NonMinusOneRank";
    case ErrorKind::ModelAssumption: return "ModelAssumption";
    case ErrorKind::Admissibility: return "Admissibility";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnboundedSearch: return 2;
    case ErrorKind::ModelAssumption: return 3;
    case ErrorKind::Admissibility: return 4;
    default: return 1;
  }
}

}  // namespace tiltwall
