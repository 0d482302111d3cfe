#pragma once

// Fixed-step explicit Runge-Kutta integration for small first-order systems.
//
// The stepper works on std::array states so that the integrator never
// allocates per step. Abscissae are always computed as i * step (the final
// node is pinned to the grid endpoint) so long runs do not accumulate drift.

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "blasius/error.hpp"

namespace blasius {

template <std::size_t N>
using StateVector = std::array<double, N>;

/// Coefficients of an explicit Runge-Kutta scheme.
///
/// Construction validates explicitness (strictly lower-triangular coupling),
/// consistency (weights sum to one) and the row-sum condition on the nodes.
class ButcherTableau {
 public:
  ButcherTableau(std::string name, std::vector<double> nodes,
                 std::vector<double> weights,
                 std::vector<std::vector<double>> coupling, int declared_order);

  std::size_t stage_count() const noexcept { return nodes_.size(); }
  int declared_order() const noexcept { return declared_order_; }
  const std::string& name() const noexcept { return name_; }

  double node(std::size_t i) const { return nodes_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  double coupling(std::size_t i, std::size_t j) const {
    return coupling_[i * stage_count() + j];
  }

 private:
  std::string name_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> coupling_;  // row-major, stage_count x stage_count
  int declared_order_;
};

/// 11-stage explicit scheme of order 8 (Cooper and Verner, 1972).
const ButcherTableau& cooper_verner8();

/// Classical 4-stage scheme of order 4.
const ButcherTableau& classical_rk4();

/// Uniform grid on [0, endpoint].
struct GridSpec {
  double step = 0.001;
  double endpoint = 10.0;

  /// Throws SolverError(InvalidArgument) unless step > 0, endpoint > 0,
  /// endpoint / step >= 10 and endpoint is an integer multiple of step
  /// within 1e-12 relative.
  void validate() const;

  std::size_t intervals() const;

  double abscissa(std::size_t i) const {
    return i == intervals() ? endpoint : static_cast<double>(i) * step;
  }
};

template <std::size_t N>
struct Sample {
  double t;
  StateVector<N> y;
};

/// Component magnitude beyond which an integration is declared divergent.
inline constexpr double kStateBlowUpThreshold = 1e12;

/// Projection hook that leaves the state untouched.
struct NoProjection {
  template <class State>
  void operator()(double, State&) const noexcept {}
};

namespace detail {

template <std::size_t N>
bool all_finite(const StateVector<N>& y) {
  for (double v : y) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

// One step using caller-provided stage storage (k.size() >= stage_count).
template <std::size_t N, class Rhs>
StateVector<N> step_with(Rhs& rhs, const ButcherTableau& tableau, double t,
                         const StateVector<N>& y, double h,
                         std::vector<StateVector<N>>& k) {
  const std::size_t stages = tableau.stage_count();
  for (std::size_t i = 0; i < stages; ++i) {
    StateVector<N> stage = y;
    for (std::size_t j = 0; j < i; ++j) {
      const double a = tableau.coupling(i, j);
      if (a == 0.0) continue;
      for (std::size_t c = 0; c < N; ++c) stage[c] += h * a * k[j][c];
    }
    const double ti = t + tableau.node(i) * h;
    k[i] = rhs(ti, stage);
    if (!all_finite(k[i])) {
      throw SolverError(ErrorCode::RhsBlowUp,
                        fmt::format("rhs blow-up at t={} in stage {}", ti, i));
    }
  }
  StateVector<N> next = y;
  for (std::size_t i = 0; i < stages; ++i) {
    const double b = tableau.weight(i);
    if (b == 0.0) continue;
    for (std::size_t c = 0; c < N; ++c) next[c] += h * b * k[i][c];
  }
  return next;
}

template <std::size_t N>
void check_state(double t, const StateVector<N>& y) {
  for (double v : y) {
    if (!std::isfinite(v) || std::fabs(v) > kStateBlowUpThreshold) {
      throw SolverError(ErrorCode::StateBlowUp,
                        fmt::format("state blow-up at t={} (component {})", t, v));
    }
  }
}

}  // namespace detail

/// Advances y by one step of size h with the given tableau.
template <std::size_t N, class Rhs>
StateVector<N> single_step(Rhs&& rhs, const ButcherTableau& tableau, double t,
                           const StateVector<N>& y, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("step size must be positive, got {}", h));
  }
  std::vector<StateVector<N>> k(tableau.stage_count());
  return detail::step_with(rhs, tableau, t, y, h, k);
}

/// Integrates from t = 0 over the grid and returns every node, including
/// t = 0 (equal to y0) and t = endpoint.
///
/// `project` is applied to each accepted state before it is stored; it may
/// clamp the state onto an admissible set or throw.
template <std::size_t N, class Rhs, class Project = NoProjection>
std::vector<Sample<N>> integrate(Rhs&& rhs, const ButcherTableau& tableau,
                                 const GridSpec& grid, const StateVector<N>& y0,
                                 Project&& project = {}) {
  grid.validate();
  if (!detail::all_finite(y0)) {
    throw SolverError(ErrorCode::InvalidArgument, "initial state is not finite");
  }
  const std::size_t n = grid.intervals();
  std::vector<Sample<N>> out;
  out.reserve(n + 1);
  out.push_back({0.0, y0});

  std::vector<StateVector<N>> k(tableau.stage_count());
  StateVector<N> y = y0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.abscissa(i);
    y = detail::step_with(rhs, tableau, t, y, grid.step, k);
    const double t_next = grid.abscissa(i + 1);
    detail::check_state(t_next, y);
    project(t_next, y);
    out.push_back({t_next, y});
  }
  return out;
}

}  // namespace blasius
