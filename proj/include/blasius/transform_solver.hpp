#pragma once

// Non-iterative transformation method.
//
// Integrate the starred problem with f*(0) = f*'(0) = 0, f*''(0) = 1 up to a
// truncated boundary, read the asymptotic slope s = f*'(eta*_inf), and map
// back with the scaling group:
//
//   lambda  = s^(1 / (1 - delta))
//   f''(0)  = lambda^(2 delta - 1)
//   eta     = lambda^-delta eta*,   f = f* / lambda,
//   f'      = lambda^(delta - 1) f*',   f'' = lambda^(2 delta - 1) f*''.
//
// See docs/method.md for the derivation of the lambda exponent.

#include <vector>

#include "blasius/model.hpp"

namespace blasius {

enum class Frame { Starred, Physical };

const char* to_string(Frame frame) noexcept;

/// Samples of (f, f', f'') on a uniform grid starting at 0.
struct SolutionProfile {
  Frame frame = Frame::Starred;
  double step = 0.0;
  std::vector<double> abscissae;
  std::vector<State3> values;

  std::size_t size() const noexcept { return abscissae.size(); }
  const State3& back() const { return values.back(); }
};

struct TransformResult {
  ModelParameter param;
  double starred_slope;       // f*'(eta*_inf)
  double lambda;
  double skin_friction;       // f''(0)
  double truncated_boundary;  // eta*_inf actually used
  SolutionProfile starred;
  SolutionProfile physical;
};

/// Request for the truncated boundary to be chosen by the plateau search.
struct AutoBoundary {
  double step = 0.001;
  double tol = 1e-8;
  double start = 5.0;
};

/// Plateau search limit: candidates run over start * 2^k for k = 0..kMaxDoublings.
inline constexpr int kMaxDoublings = 10;

/// 1e-3, shrunk to 1e-4 for P <= 0.1 where 1 / (P (P + 1)) gets large.
double default_step(double p);

/// default_step(p) on [0, 10].
GridSpec default_grid(const ModelParameter& param);

SolutionProfile integrate_starred(const ModelParameter& param, const GridSpec& grid);

/// Smallest E in start, 2 start, 4 start, ... (up to start * 2^kMaxDoublings)
/// with |f*'(2E) - f*'(E)| < tol. Throws NoPlateau when the cap is exceeded
/// or tol is below the rounding floor of f*'.
double find_truncated_boundary(const ModelParameter& param, double step, double tol,
                               double start);

/// lambda = starred_slope^(1 / (1 - delta)) = starred_slope^((2P - 1) / (P + 1)).
double recover_lambda(const ModelParameter& param, double starred_slope);

/// f''(0) = lambda^(2 delta - 1) * f*''(0) with f*''(0) = 1.
double recover_skin_friction(const ModelParameter& param, double lambda);

SolutionProfile rescale_profile(const SolutionProfile& starred, const ModelParameter& param,
                                double lambda);

TransformResult solve(const ModelParameter& param, const GridSpec& grid);
TransformResult solve(const ModelParameter& param, const AutoBoundary& request);

/// Physical-frame grid the result lives on: the starred grid scaled by lambda^-delta.
GridSpec physical_grid(const TransformResult& result);

/// Max over interior nodes of |P(P+1) f''' + f (f'')^(2-P)| with f''' taken as a
/// centred difference of f''.
double max_equation_residual(const SolutionProfile& profile, const ModelParameter& param);

}  // namespace blasius
