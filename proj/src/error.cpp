#include <hexforce/error.hpp>

namespace hexforce {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorKind::UnknownHexagon: return "UnknownHexagon";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorKind::NotCatacondensed: return "NotCatacondensed";
    case ErrorKind::NotAnECut: return "NotAnECut";
    case ErrorKind::UncoveredNiceCycle: return "UncoveredNiceCycle";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

} // namespace hexforce
