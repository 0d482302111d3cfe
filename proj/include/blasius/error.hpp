#pragma once

#include <stdexcept>
#include <string>

namespace blasius {

enum class ErrorCode {
  // parameter domain
  NonpositiveIndex,
  SingularScalingExponent,
  OutsideLaminarRange,
  // integration
  RhsBlowUp,
  StateBlowUp,
  NegativeCurvature,
  CurvatureSignLoss,
  NoPlateau,
  // shooting
  ShotDiverged,
  BracketInvalid,
  NoConvergence,
  // argument validation
  InvalidArgument,
};

/// Short stable tag for an error code ("rhs blow-up", "no plateau", ...).
const char* to_string(ErrorCode code) noexcept;

/// True for errors caused by a bad power-law index or malformed input,
/// as opposed to numerical failures during a run.
bool is_domain_error(ErrorCode code) noexcept;

class SolverError : public std::runtime_error {
 public:
  SolverError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blasius
