#pragma once

// Sweeps behind the command-line front end, kept in the library so that the
// tests can drive them without spawning processes.

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "blasius/error.hpp"
#include "blasius/model.hpp"
#include "blasius/transform_solver.hpp"

namespace blasius {

/// Allowed |ours - published| against the transformation-method column.
inline constexpr double kTableTolerance = 5e-4;
/// Relaxed tolerance for the stiff rows (P < 0.1).
inline constexpr double kStiffTableTolerance = 5e-3;
/// Allowed |transformation - shooting| in the validate sweep.
inline constexpr double kOracleTolerance = 1e-6;

struct RunRecord {
  double p = 0.0;
  std::optional<double> delta;
  std::optional<double> lambda;
  std::optional<double> starred_slope;
  std::optional<double> truncated_boundary;
  std::optional<double> skin_friction;
  std::optional<double> pohlhausen;  // closed-form estimate
  std::optional<double> oracle_skin_friction;
  std::optional<ReferenceRow> reference;
  std::optional<double> deviation;         // |skin_friction - reference->nonitm|
  std::optional<double> oracle_deviation;  // |skin_friction - oracle_skin_friction|
  std::optional<double> tolerance;
  std::optional<ErrorCode> error_code;
  std::string error;

  bool failed() const;
};

struct RunReport {
  std::vector<RunRecord> records;

  /// 0 when every row succeeded within tolerance, 2 if any row hit a domain
  /// or argument error, 1 otherwise.
  int exit_status() const;
};

/// Indices of the published table, without the singular P = 0.5.
std::vector<double> default_table_indices();

double table_tolerance(double p);

/// Transformation method at the default grid for every p, compared with the
/// published columns. Rows run concurrently; output order follows `ps`.
RunReport run_table(std::span<const double> ps);

/// Transformation method and shooting on the same truncated domain.
RunReport run_validate(std::span<const double> ps);

/// Closed-form estimate against the published Pohlhausen column.
RunReport run_pohlhausen(std::span<const double> ps);

std::string format_table(const RunReport& report);
std::string format_validate(const RunReport& report);
std::string format_pohlhausen(const RunReport& report);

/// Key/value summary of a single solve.
std::string format_solve(const TransformResult& result);

/// 9 significant digits.
std::string format_value(double v);

/// Header `eta,f,df,d2f`, one row per node, 12 significant digits, '\n' endings.
void write_profile_csv(std::ostream& out, const SolutionProfile& profile);

}  // namespace blasius
