#include "blasius/shooting_oracle.hpp"

#include <cmath>

#include <fmt/format.h>

namespace blasius {

void ShootingConfig::validate() const {
  if (!(bracket_low > 0.0) || !(bracket_low < bracket_high) || !std::isfinite(bracket_high)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("bracket [{}, {}] must satisfy 0 < low < high", bracket_low,
                                  bracket_high));
  }
  if (!(residual_tol > 0.0)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("residual tolerance must be positive, got {}", residual_tol));
  }
  if (max_iterations <= 0) {
    throw SolverError(ErrorCode::InvalidArgument, "max_iterations must be positive");
  }
  grid.validate();
}

double shoot(const ModelParameter& param, double guess, const GridSpec& grid) {
  if (!(guess > 0.0) || !std::isfinite(guess)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("guess must be positive, got {}", guess));
  }
  grid.validate();

  const auto& tableau = cooper_verner8();
  std::vector<State3> k(tableau.stage_count());
  auto f = [&param](double, const State3& y) { return rhs(param, y); };

  State3 y{0.0, 0.0, guess};
  try {
    const std::size_t n = grid.intervals();
    for (std::size_t i = 0; i < n; ++i) {
      y = detail::step_with(f, tableau, grid.abscissa(i), y, grid.step, k);
      const double eta = grid.abscissa(i + 1);
      detail::check_state(eta, y);
      project_curvature(param, eta, y);
    }
  } catch (const SolverError& e) {
    throw SolverError(ErrorCode::ShotDiverged,
                      fmt::format("shot diverged for guess f''(0)={}: {}", guess, e.what()));
  }
  return y[1] - 1.0;
}

double solve_by_shooting(const ModelParameter& param, const ShootingConfig& config) {
  config.validate();

  double lo = config.bracket_low;
  double hi = config.bracket_high;
  double r_lo = shoot(param, lo, config.grid);
  double r_hi = shoot(param, hi, config.grid);
  if (std::fabs(r_lo) < config.residual_tol) return lo;
  if (std::fabs(r_hi) < config.residual_tol) return hi;
  if ((r_lo < 0.0) == (r_hi < 0.0)) {
    throw SolverError(ErrorCode::BracketInvalid,
                      fmt::format("bracket invalid: residuals {} at {} and {} at {} share a sign "
                                  "(P={})",
                                  r_lo, lo, r_hi, hi, param.p()));
  }

  int iterations = 0;
  while (hi - lo > kSecantHandover && iterations < config.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double r_mid = shoot(param, mid, config.grid);
    ++iterations;
    if (std::fabs(r_mid) < config.residual_tol) return mid;
    if ((r_mid < 0.0) == (r_lo < 0.0)) {
      lo = mid;
      r_lo = r_mid;
    } else {
      hi = mid;
      r_hi = r_mid;
    }
  }

  // Secant from the bracket ends; an iterate that leaves the bracket is
  // replaced by the midpoint so the root stays enclosed.
  double x0 = lo, r0 = r_lo;
  double x1 = hi, r1 = r_hi;
  while (iterations < config.max_iterations) {
    double x2 = (r1 != r0) ? x1 - r1 * (x1 - x0) / (r1 - r0) : 0.5 * (lo + hi);
    if (!(x2 > lo && x2 < hi)) x2 = 0.5 * (lo + hi);
    const double r2 = shoot(param, x2, config.grid);
    ++iterations;
    if (std::fabs(r2) < config.residual_tol) return x2;
    if ((r2 < 0.0) == (r_lo < 0.0)) {
      lo = x2;
      r_lo = r2;
    } else {
      hi = x2;
      r_hi = r2;
    }
    x0 = x1;
    r0 = r1;
    x1 = x2;
    r1 = r2;
  }
  throw SolverError(ErrorCode::NoConvergence,
                    fmt::format("no convergence after {} iterations (P={}, bracket [{}, {}])",
                                config.max_iterations, param.p(), lo, hi));
}

}  // namespace blasius
