#include "blasius/transform_solver.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace blasius {

namespace {

auto model_rhs(const ModelParameter& param) {
  return [&param](double, const State3& y) { return rhs(param, y); };
}

auto model_projection(const ModelParameter& param) {
  return [&param](double eta, State3& y) { project_curvature(param, eta, y); };
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("{} must be positive, got {}", what, v));
  }
}

}  // namespace

const char* to_string(Frame frame) noexcept {
  return frame == Frame::Starred ? "starred" : "physical";
}

double default_step(double p) { return p <= 0.1 ? 1e-4 : 1e-3; }

GridSpec default_grid(const ModelParameter& param) {
  return GridSpec{default_step(param.p()), 10.0};
}

SolutionProfile integrate_starred(const ModelParameter& param, const GridSpec& grid) {
  const auto samples = integrate(model_rhs(param), cooper_verner8(), grid,
                                 State3{0.0, 0.0, 1.0}, model_projection(param));
  SolutionProfile profile;
  profile.frame = Frame::Starred;
  profile.step = grid.step;
  profile.abscissae.reserve(samples.size());
  profile.values.reserve(samples.size());
  for (const auto& s : samples) {
    profile.abscissae.push_back(s.t);
    profile.values.push_back(s.y);
  }
  return profile;
}

double find_truncated_boundary(const ModelParameter& param, double step, double tol,
                               double start) {
  require_positive(step, "step");
  require_positive(tol, "plateau tolerance");
  require_positive(start, "start");
  if (start < 10.0 * step * (1.0 - 1e-12)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("start {} must be at least 10 steps of {}", start, step));
  }
  GridSpec{step, start}.validate();

  const auto f = model_rhs(param);
  const auto project = model_projection(param);
  const auto& tableau = cooper_verner8();
  std::vector<State3> k(tableau.stage_count());

  const std::size_t base = GridSpec{step, start}.intervals();
  State3 y{0.0, 0.0, 1.0};
  std::size_t done = 0;
  auto advance_to = [&](std::size_t target) {
    for (; done < target; ++done) {
      y = detail::step_with(f, tableau, static_cast<double>(done) * step, y, step, k);
      const double eta = static_cast<double>(done + 1) * step;
      detail::check_state(eta, y);
      project(eta, y);
    }
    return y[1];
  };

  double slope = advance_to(base);
  for (int doubling = 0; doubling <= kMaxDoublings; ++doubling) {
    const std::size_t nodes = base << doubling;
    const double next = advance_to(2 * nodes);
    const double floor =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(slope), std::fabs(next));
    if (tol <= floor) {
      throw SolverError(ErrorCode::NoPlateau,
                        fmt::format("no plateau: tolerance {} is below the rounding floor {} "
                                    "of f*' (P={})",
                                    tol, floor, param.p()));
    }
    if (std::fabs(next - slope) < tol) {
      return static_cast<double>(nodes) * step;
    }
    slope = next;
  }
  throw SolverError(ErrorCode::NoPlateau,
                    fmt::format("no plateau: f*' still moves by more than {} at eta*={} (P={})",
                                tol, start * std::ldexp(1.0, kMaxDoublings), param.p()));
}

double recover_lambda(const ModelParameter& param, double starred_slope) {
  require_positive(starred_slope, "starred slope");
  return std::pow(starred_slope, 1.0 / (1.0 - param.delta()));
}

double recover_skin_friction(const ModelParameter& param, double lambda) {
  require_positive(lambda, "lambda");
  return std::pow(lambda, 2.0 * param.delta() - 1.0);
}

SolutionProfile rescale_profile(const SolutionProfile& starred, const ModelParameter& param,
                                double lambda) {
  require_positive(lambda, "lambda");
  if (starred.frame != Frame::Starred) {
    throw SolverError(ErrorCode::InvalidArgument, "rescale_profile expects a starred profile");
  }
  const double delta = param.delta();
  const double eta_scale = std::pow(lambda, -delta);
  const double f_scale = 1.0 / lambda;
  const double slope_scale = std::pow(lambda, delta - 1.0);
  const double curvature_scale = std::pow(lambda, 2.0 * delta - 1.0);

  SolutionProfile physical;
  physical.frame = Frame::Physical;
  physical.step = eta_scale * starred.step;
  physical.abscissae.reserve(starred.size());
  physical.values.reserve(starred.size());
  for (std::size_t i = 0; i < starred.size(); ++i) {
    const auto& v = starred.values[i];
    physical.abscissae.push_back(eta_scale * starred.abscissae[i]);
    physical.values.push_back({f_scale * v[0], slope_scale * v[1], curvature_scale * v[2]});
  }
  return physical;
}

TransformResult solve(const ModelParameter& param, const GridSpec& grid) {
  auto starred = integrate_starred(param, grid);
  const double slope = starred.back()[1];
  if (!(slope > 0.0)) {
    throw SolverError(ErrorCode::StateBlowUp,
                      fmt::format("starred slope {} is not positive (P={})", slope, param.p()));
  }
  const double lambda = recover_lambda(param, slope);
  const double skin_friction = recover_skin_friction(param, lambda);
  auto physical = rescale_profile(starred, param, lambda);
  return TransformResult{param,         slope, lambda, skin_friction, grid.endpoint,
                         std::move(starred), std::move(physical)};
}

TransformResult solve(const ModelParameter& param, const AutoBoundary& request) {
  const double boundary =
      find_truncated_boundary(param, request.step, request.tol, request.start);
  return solve(param, GridSpec{request.step, boundary});
}

GridSpec physical_grid(const TransformResult& result) {
  const double eta_scale = std::pow(result.lambda, -result.param.delta());
  return GridSpec{eta_scale * result.starred.step, eta_scale * result.truncated_boundary};
}

double max_equation_residual(const SolutionProfile& profile, const ModelParameter& param) {
  double worst = 0.0;
  const double h = profile.step;
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) {
    const auto& v = profile.values[i];
    const double third = (profile.values[i + 1][2] - profile.values[i - 1][2]) / (2.0 * h);
    const double curvature = std::max(v[2], 0.0);
    const double r = param.stiffness() * third +
                     v[0] * std::pow(curvature, param.curvature_exponent());
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

}  // namespace blasius
