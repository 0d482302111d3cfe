#include "blasius/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

#include <fmt/format.h>

#include "blasius/shooting_oracle.hpp"

namespace blasius {

namespace {

void record_error(RunRecord& rec, const SolverError& e) {
  rec.error_code = e.code();
  rec.error = e.what();
}

template <class Fn>
RunReport sweep(std::span<const double> ps, Fn fill) {
  std::vector<std::future<RunRecord>> pending;
  pending.reserve(ps.size());
  for (double p : ps) {
    pending.push_back(std::async(std::launch::async, [p, &fill] {
      RunRecord rec;
      rec.p = p;
      try {
        fill(rec);
      } catch (const SolverError& e) {
        record_error(rec, e);
      }
      return rec;
    }));
  }
  RunReport report;
  for (auto& f : pending) report.records.push_back(f.get());
  return report;
}

void fill_solution(RunRecord& rec, const TransformResult& r) {
  rec.delta = r.param.delta();
  rec.lambda = r.lambda;
  rec.starred_slope = r.starred_slope;
  rec.truncated_boundary = r.truncated_boundary;
  rec.skin_friction = r.skin_friction;
}

std::string cell(const std::optional<double>& v) { return v ? format_value(*v) : "-"; }

std::string status(const RunRecord& rec) {
  if (rec.error_code) return "FAILED: " + rec.error;
  return rec.failed() ? "FAIL" : "ok";
}

}  // namespace

bool RunRecord::failed() const {
  if (error_code) return true;
  if (tolerance) {
    if (deviation && *deviation > *tolerance) return true;
    if (oracle_deviation && *oracle_deviation > *tolerance) return true;
  }
  return false;
}

int RunReport::exit_status() const {
  bool any_failed = false;
  for (const auto& rec : records) {
    if (rec.error_code && is_domain_error(*rec.error_code)) return 2;
    any_failed = any_failed || rec.failed();
  }
  return any_failed ? 1 : 0;
}

std::vector<double> default_table_indices() {
  std::vector<double> ps;
  for (const auto& row : reference_table()) {
    if (row.p != 0.5) ps.push_back(row.p);
  }
  return ps;
}

double table_tolerance(double p) { return p < 0.1 - 1e-12 ? kStiffTableTolerance : kTableTolerance; }

RunReport run_table(std::span<const double> ps) {
  return sweep(ps, [](RunRecord& rec) {
    rec.reference = find_reference(rec.p);
    const auto param = make_parameter(rec.p);
    rec.pohlhausen = pohlhausen_skin_friction(rec.p);
    fill_solution(rec, solve(param, default_grid(param)));
    if (rec.reference && rec.reference->nonitm) {
      rec.deviation = std::fabs(*rec.skin_friction - *rec.reference->nonitm);
      rec.tolerance = table_tolerance(rec.p);
    }
  });
}

RunReport run_validate(std::span<const double> ps) {
  return sweep(ps, [](RunRecord& rec) {
    const auto param = make_parameter(rec.p);
    const auto result = solve(param, default_grid(param));
    fill_solution(rec, result);
    ShootingConfig config;
    config.grid = physical_grid(result);
    rec.oracle_skin_friction = solve_by_shooting(param, config);
    rec.oracle_deviation = std::fabs(result.skin_friction - *rec.oracle_skin_friction);
    rec.tolerance = kOracleTolerance;
  });
}

RunReport run_pohlhausen(std::span<const double> ps) {
  return sweep(ps, [](RunRecord& rec) {
    rec.reference = find_reference(rec.p);
    rec.pohlhausen = pohlhausen_skin_friction(rec.p);
    if (rec.reference && rec.reference->pohlhausen) {
      rec.deviation = std::fabs(*rec.pohlhausen - *rec.reference->pohlhausen);
    }
  });
}

std::string format_value(double v) { return fmt::format("{:.9g}", v); }

std::string format_table(const RunReport& report) {
  std::string out = fmt::format("{:>6}  {:>12}  {:>17}  {:>19}  {:>14}  {:>13}  {:>12}  {}\n",
                                "P", "Acrivos", "Pohlhausen(table)", "Pohlhausen(formula)",
                                "non-ITM(pub)", "non-ITM(ours)", "|dev|", "status");
  for (const auto& rec : report.records) {
    const auto& ref = rec.reference;
    out += fmt::format("{:>6}  {:>12}  {:>17}  {:>19}  {:>14}  {:>13}  {:>12}  {}\n",
                       fmt::format("{:g}", rec.p), cell(ref ? ref->acrivos : std::nullopt),
                       cell(ref ? ref->pohlhausen : std::nullopt), cell(rec.pohlhausen),
                       cell(ref ? ref->nonitm : std::nullopt), cell(rec.skin_friction),
                       rec.deviation ? fmt::format("{:.3g}", *rec.deviation) : "-",
                       status(rec));
  }
  return out;
}

std::string format_validate(const RunReport& report) {
  std::string out = fmt::format("{:>6}  {:>13}  {:>13}  {:>12}  {}\n", "P", "non-ITM",
                                "shooting", "|dev|", "status");
  for (const auto& rec : report.records) {
    out += fmt::format("{:>6}  {:>13}  {:>13}  {:>12}  {}\n", fmt::format("{:g}", rec.p),
                       cell(rec.skin_friction), cell(rec.oracle_skin_friction),
                       rec.oracle_deviation ? fmt::format("{:.3g}", *rec.oracle_deviation) : "-",
                       status(rec));
  }
  return out;
}

std::string format_pohlhausen(const RunReport& report) {
  std::string out = fmt::format("{:>6}  {:>19}  {:>17}  {:>12}  {}\n", "P",
                                "Pohlhausen(formula)", "Pohlhausen(table)", "|dev|", "status");
  for (const auto& rec : report.records) {
    const auto& ref = rec.reference;
    out += fmt::format("{:>6}  {:>19}  {:>17}  {:>12}  {}\n", fmt::format("{:g}", rec.p),
                       cell(rec.pohlhausen), cell(ref ? ref->pohlhausen : std::nullopt),
                       rec.deviation ? fmt::format("{:.3g}", *rec.deviation) : "-",
                       status(rec));
  }
  return out;
}

std::string format_solve(const TransformResult& r) {
  const auto grid = physical_grid(r);
  return fmt::format(
      "P {:g}\n"
      "delta {}\n"
      "lambda {}\n"
      "starred_slope {}\n"
      "eta_inf_starred {}\n"
      "eta_inf {}\n"
      "step_starred {:g}\n"
      "skin_friction {}\n",
      r.param.p(), format_value(r.param.delta()), format_value(r.lambda),
      format_value(r.starred_slope), format_value(r.truncated_boundary),
      format_value(grid.endpoint), r.starred.step, format_value(r.skin_friction));
}

void write_profile_csv(std::ostream& out, const SolutionProfile& profile) {
  fmt::memory_buffer buf;
  buf.reserve(64 * (profile.size() + 1));
  fmt::format_to(std::back_inserter(buf), "eta,f,df,d2f\n");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& v = profile.values[i];
    fmt::format_to(std::back_inserter(buf), "{:.12g},{:.12g},{:.12g},{:.12g}\n",
                   profile.abscissae[i], v[0], v[1], v[2]);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

}  // namespace blasius
