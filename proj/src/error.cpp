#include "blasius/error.hpp"

namespace blasius {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonpositiveIndex: return "nonpositive index";
    case ErrorCode::SingularScalingExponent: return "singular scaling exponent";
    case ErrorCode::OutsideLaminarRange: return "outside laminar range";
    case ErrorCode::RhsBlowUp: return "rhs blow-up";
    case ErrorCode::StateBlowUp: return "state blow-up";
    case ErrorCode::NegativeCurvature: return "negative curvature";
    case ErrorCode::CurvatureSignLoss: return "curvature sign loss";
    case ErrorCode::NoPlateau: return "no plateau";
    case ErrorCode::ShotDiverged: return "shot diverged";
    case ErrorCode::BracketInvalid: return "bracket invalid";
    case ErrorCode::NoConvergence: return "no convergence";
    case ErrorCode::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

bool is_domain_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonpositiveIndex:
    case ErrorCode::SingularScalingExponent:
    case ErrorCode::OutsideLaminarRange:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace blasius
