#include "tpro/error.hpp"

namespace tpro {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidLabeling: return "InvalidLabeling";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OddRefractionCycle: return "OddRefractionCycle";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::NotATreeEdge: return "NotATreeEdge";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::RefractionPresent: return "RefractionPresent";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::RootOfUnityMismatch: return "RootOfUnityMismatch";
    case ErrorKind::BadResidues: return "BadResidues";
    case ErrorKind::BadSum: return "BadSum";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OrbitTooLarge: return "OrbitTooLarge";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace tpro
