#include "blasius/model.hpp"

#include <array>
#include <cmath>

#include <fmt/format.h>

namespace blasius {

namespace {

void check_index(double p) {
  if (!std::isfinite(p)) {
    throw SolverError(ErrorCode::InvalidArgument, fmt::format("invalid index P={}", p));
  }
  if (p <= 0.0) {
    throw SolverError(ErrorCode::NonpositiveIndex,
                      fmt::format("nonpositive index at P={}", p));
  }
  if (p >= 2.0) {
    throw SolverError(ErrorCode::OutsideLaminarRange,
                      fmt::format("outside laminar range at P={}", p));
  }
}

// clang-format off
constexpr std::array<ReferenceRow, 12> kTable = {{
    {0.05, 1.400938, 0.214892, 1.540752},
    {0.1,  0.729857, 0.221302, 0.826478},
    {0.2,  0.505623, 0.237305, 0.490342},
    {0.3,  0.354290, 0.244046, 0.391515},
    {0.4,  std::nullopt, std::nullopt, 0.350396},
    {0.5,  0.331200, 0.268324, std::nullopt},
    {0.6,  std::nullopt, std::nullopt, 0.3239457},
    {0.7,  std::nullopt, std::nullopt, 0.3220337},
    {0.8,  std::nullopt, std::nullopt, 0.323544},
    {0.9,  std::nullopt, std::nullopt, 0.327139},
    {1.0,  0.33206,  0.323,    0.332057},
    {1.5,  0.363215, 0.384047, 0.398432},
}};
// clang-format on

}  // namespace

ModelParameter ModelParameter::make(double p) {
  check_index(p);
  if (p == 0.5) {
    throw SolverError(ErrorCode::SingularScalingExponent,
                      fmt::format("singular scaling exponent at P={}", p));
  }
  return ModelParameter(p, (p - 2.0) / (2.0 * p - 1.0));
}

State3 rhs(const ModelParameter& param, const State3& y) {
  double curvature = y[2];
  if (curvature < 0.0) {
    if (curvature < -kCurvatureFloor && !param.curvature_extinguishes()) {
      throw SolverError(ErrorCode::NegativeCurvature,
                        fmt::format("negative curvature f''={} at P={}", curvature,
                                    param.p()));
    }
    curvature = 0.0;
  }
  const double forcing = y[0] * std::pow(curvature, param.curvature_exponent());
  return {y[1], curvature, -forcing / param.stiffness()};
}

void project_curvature(const ModelParameter& param, double eta, State3& y) {
  if (y[2] >= 0.0) return;
  if (y[2] < -kCurvatureFloor && !param.curvature_extinguishes()) {
    throw SolverError(ErrorCode::CurvatureSignLoss,
                      fmt::format("curvature sign loss: f''={} at eta={} (P={})", y[2],
                                  eta, param.p()));
  }
  y[2] = 0.0;
}

double pohlhausen_skin_friction(double p) {
  check_index(p);
  const double base = (39.0 / 280.0) * (1.5 / (p + 1.0));
  return std::pow(base, p * p / (p + 1.0));
}

std::span<const ReferenceRow> reference_table() { return kTable; }

std::optional<ReferenceRow> find_reference(double p) {
  for (const auto& row : kTable) {
    if (std::fabs(row.p - p) < 1e-9) return row;
  }
  return std::nullopt;
}

}  // namespace blasius
