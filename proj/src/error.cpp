#include "linfeig/error.hpp"

namespace linfeig {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::NonpositiveWeight: return "NonpositiveWeight";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EmptyBoundary: return "EmptyBoundary";
    case Errc::BoundaryIsEverything: return "BoundaryIsEverything";
    case Errc::ConflictingEdge: return "ConflictingEdge";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::InvalidP: return "InvalidP";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::NotInUnitBall: return "NotInUnitBall";
    case Errc::NonUnitWeights: return "NonUnitWeights";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::MissingBoundParams: return "MissingBoundParams";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InvalidProfile: return "InvalidProfile";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::NonconvergedAfterMaxIters: return "NonconvergedAfterMaxIters";
    case Errc::EmptyTrajectory: return "EmptyTrajectory";
    case Errc::DegenerateProfile: return "DegenerateProfile";
  }
  return "Unknown";
}

bool is_numerical(Errc code) noexcept {
  return code == Errc::NonconvergedAfterMaxIters || code == Errc::EmptyTrajectory ||
         code == Errc::DegenerateProfile;
}

}  // namespace linfeig
