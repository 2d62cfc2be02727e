#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linfeig {

enum class Errc {
  // input / contract errors
  IndexOutOfRange,
  DisconnectedGraph,
  NonpositiveWeight,
  SelfLoop,
  EmptyBoundary,
  BoundaryIsEverything,
  ConflictingEdge,
  DomainMismatch,
  InvalidP,
  ZeroFunction,
  NotInUnitBall,
  NonUnitWeights,
  OutOfRange,
  MissingBoundParams,
  InvalidIndex,
  InvalidProfile,
  MalformedInput,
  // numerical failures
  NonconvergedAfterMaxIters,
  EmptyTrajectory,
  DegenerateProfile,
};

std::string_view to_string(Errc code) noexcept;

/// True for errors caused by the numerics rather than by the caller's input.
bool is_numerical(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace linfeig
