#pragma once

// Classical shooting on the unknown wall curvature f''(0). Independent of the
// transformation method apart from the shared Runge-Kutta stepper; used to
// cross-check it.

#include "blasius/model.hpp"

namespace blasius {

struct ShootingConfig {
  double bracket_low = 0.05;
  double bracket_high = 4.0;
  double residual_tol = 1e-10;  // on |f'(eta_inf) - 1|
  int max_iterations = 200;
  GridSpec grid;

  void validate() const;
};

/// Bracket width below which bisection hands over to the secant iteration.
inline constexpr double kSecantHandover = 1e-3;

/// f'(eta_inf) - 1 for the initial value problem f(0) = f'(0) = 0, f''(0) = guess.
/// Integration failures surface as ShotDiverged.
double shoot(const ModelParameter& param, double guess, const GridSpec& grid);

/// f''(0) with |residual| < residual_tol: bisection down to kSecantHandover,
/// then a secant iteration kept inside the bracket.
double solve_by_shooting(const ModelParameter& param, const ShootingConfig& config);

}  // namespace blasius
