#pragma once

// Power-law boundary layer over a flat plate:
//
//   P (P + 1) f''' + f (f'')^(2 - P) = 0,
//   f(0) = f'(0) = 0,  f'(eta) -> 1 as eta -> infinity.
//
// The equation and the two wall conditions are invariant under
// f* = lambda f, eta* = lambda^delta eta with delta = (P - 2) / (2P - 1).

#include <optional>
#include <span>

#include "blasius/rk_integrator.hpp"

namespace blasius {

/// (f, f', f'') in whichever frame the caller is working in.
using State3 = StateVector<3>;

/// Curvature values in [-kCurvatureFloor, 0) are rounding noise and read as 0.
inline constexpr double kCurvatureFloor = 1e-12;

/// A validated power-law index together with its scaling exponent.
class ModelParameter {
 public:
  /// Accepts 0 < p < 2 with p != 0.5; throws SolverError otherwise.
  static ModelParameter make(double p);

  double p() const noexcept { return p_; }
  double delta() const noexcept { return delta_; }

  /// Coefficient P (P + 1) of the third derivative.
  double stiffness() const noexcept { return p_ * (p_ + 1.0); }

  /// Exponent 2 - P applied to the curvature.
  double curvature_exponent() const noexcept { return 2.0 - p_; }

  /// For P > 1 the curvature exponent is below one and f'' reaches zero at a
  /// finite eta, after which f'' = 0 is the solution. Zero curvature is then
  /// an admissible state rather than a failure.
  bool curvature_extinguishes() const noexcept { return p_ > 1.0; }

 private:
  ModelParameter(double p, double delta) : p_(p), delta_(delta) {}

  double p_;
  double delta_;
};

inline ModelParameter make_parameter(double p) { return ModelParameter::make(p); }

/// Right-hand side of the first-order system (f', f'', -f (f'')^(2-P) / (P(P+1))),
/// with f'' read through the clamp below in both places it appears.
///
/// Throws NegativeCurvature when f'' < -kCurvatureFloor, except when the
/// curvature extinguishes (P > 1), where negative stage values read as zero.
State3 rhs(const ModelParameter& param, const State3& y);

/// Projection applied after every accepted step: snaps f'' in the rounding
/// band (or any negative f'' when the curvature extinguishes) to zero and
/// throws CurvatureSignLoss otherwise.
void project_curvature(const ModelParameter& param, double eta, State3& y);

/// Momentum-integral (Pohlhausen) estimate of f''(0):
/// [(39/280) * 1.5 / (p + 1)]^(p^2 / (p + 1)).
double pohlhausen_skin_friction(double p);

struct ReferenceRow {
  double p;
  std::optional<double> acrivos;
  std::optional<double> pohlhausen;
  std::optional<double> nonitm;
};

/// Published f''(0) values for the extended problem: Acrivos et al.,
/// the Pohlhausen column and the transformation-method column.
std::span<const ReferenceRow> reference_table();

/// Row whose index matches p within 1e-9, if any.
std::optional<ReferenceRow> find_reference(double p);

}  // namespace blasius
