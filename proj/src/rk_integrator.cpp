#include "blasius/rk_integrator.hpp"

#include <cmath>
#include <utility>

namespace blasius {

namespace {

constexpr double kTableauTol = 1e-14;

void fail(const std::string& name, const std::string& why) {
  throw SolverError(ErrorCode::InvalidArgument,
                    fmt::format("tableau '{}': {}", name, why));
}

}  // namespace

ButcherTableau::ButcherTableau(std::string name, std::vector<double> nodes,
                               std::vector<double> weights,
                               std::vector<std::vector<double>> coupling,
                               int declared_order)
    : name_(std::move(name)),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      declared_order_(declared_order) {
  const std::size_t s = nodes_.size();
  if (s == 0) fail(name_, "no stages");
  if (declared_order_ <= 0) fail(name_, "declared order must be positive");
  if (weights_.size() != s) fail(name_, "weights length differs from stage count");
  if (coupling.size() != s) fail(name_, "coupling row count differs from stage count");

  coupling_.assign(s * s, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& row = coupling[i];
    if (row.size() > s) fail(name_, fmt::format("coupling row {} too long", i));
    double row_sum = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j >= i && row[j] != 0.0) {
        fail(name_, fmt::format("coupling ({}, {}) is not strictly lower triangular", i, j));
      }
      coupling_[i * s + j] = row[j];
      row_sum += row[j];
    }
    if (std::fabs(row_sum - nodes_[i]) > kTableauTol) {
      fail(name_, fmt::format("row {} sums to {} but node is {}", i, row_sum, nodes_[i]));
    }
  }

  double weight_sum = 0.0;
  for (double b : weights_) weight_sum += b;
  if (std::fabs(weight_sum - 1.0) > kTableauTol) {
    fail(name_, fmt::format("weights sum to {}", weight_sum));
  }
}

const ButcherTableau& cooper_verner8() {
  static const ButcherTableau tableau = [] {
    const double s = std::sqrt(21.0);
    std::vector<double> c = {0.0,
                             0.5,
                             0.5,
                             (7.0 + s) / 14.0,
                             (7.0 + s) / 14.0,
                             0.5,
                             (7.0 - s) / 14.0,
                             (7.0 - s) / 14.0,
                             0.5,
                             (7.0 + s) / 14.0,
                             1.0};
    std::vector<double> b = {1.0 / 20.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
                             49.0 / 180.0, 16.0 / 45.0, 49.0 / 180.0, 1.0 / 20.0};
    std::vector<std::vector<double>> a = {
        {},
        {0.5},
        {0.25, 0.25},
        {1.0 / 7.0, (-7.0 - 3.0 * s) / 98.0, (21.0 + 5.0 * s) / 49.0},
        {(11.0 + s) / 84.0, 0.0, (18.0 + 4.0 * s) / 63.0, (21.0 - s) / 252.0},
        {(5.0 + s) / 48.0, 0.0, (9.0 + s) / 36.0, (-231.0 + 14.0 * s) / 360.0,
         (63.0 - 7.0 * s) / 80.0},
        {(10.0 - s) / 42.0, 0.0, (-432.0 + 92.0 * s) / 315.0,
         (633.0 - 145.0 * s) / 90.0, (-504.0 + 115.0 * s) / 70.0,
         (63.0 - 13.0 * s) / 35.0},
        {1.0 / 14.0, 0.0, 0.0, 0.0, (14.0 - 3.0 * s) / 126.0,
         (13.0 - 3.0 * s) / 63.0, 1.0 / 9.0},
        {1.0 / 32.0, 0.0, 0.0, 0.0, (91.0 - 21.0 * s) / 576.0, 11.0 / 72.0,
         (-385.0 - 75.0 * s) / 1152.0, (63.0 + 13.0 * s) / 128.0},
        {1.0 / 14.0, 0.0, 0.0, 0.0, 1.0 / 9.0, (-733.0 - 147.0 * s) / 2205.0,
         (515.0 + 111.0 * s) / 504.0, (-51.0 - 11.0 * s) / 56.0,
         (132.0 + 28.0 * s) / 245.0},
        {0.0, 0.0, 0.0, 0.0, (-42.0 + 7.0 * s) / 18.0, (-18.0 + 28.0 * s) / 45.0,
         (-273.0 - 53.0 * s) / 72.0, (301.0 + 53.0 * s) / 72.0,
         (28.0 - 28.0 * s) / 45.0, (49.0 - 7.0 * s) / 18.0},
    };
    return ButcherTableau("cooper-verner-8", std::move(c), std::move(b), std::move(a), 8);
  }();
  return tableau;
}

const ButcherTableau& classical_rk4() {
  static const ButcherTableau tableau(
      "classical-4", {0.0, 0.5, 0.5, 1.0}, {1.0 / 6.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0},
      {{}, {0.5}, {0.0, 0.5}, {0.0, 0.0, 1.0}}, 4);
  return tableau;
}

void GridSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("grid step must be positive, got {}", step));
  }
  if (!(endpoint > 0.0) || !std::isfinite(endpoint)) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("grid endpoint must be positive, got {}", endpoint));
  }
  const double ratio = endpoint / step;
  const double n = std::round(ratio);
  if (n < 10.0) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("grid needs at least 10 steps (endpoint {} / step {})",
                                  endpoint, step));
  }
  if (std::fabs(n * step - endpoint) > 1e-12 * endpoint) {
    throw SolverError(ErrorCode::InvalidArgument,
                      fmt::format("grid endpoint {} is not a multiple of step {}",
                                  endpoint, step));
  }
}

std::size_t GridSpec::intervals() const {
  return static_cast<std::size_t>(std::llround(endpoint / step));
}

}  // namespace blasius
