// Command-line front end for the power-law Blasius solver.
//
//   blasius solve --p 1 --step 0.001 --eta-inf 10 [--out prefix]
//   blasius solve --p 0.3 --eta-inf auto --tol 1e-4 --out prof
//   blasius table [--p-list 0.1,0.2]
//   blasius validate --p-list 0.3,1.5
//   blasius pohlhausen [--p 1 | --p-list ...]
//
// Exit status: 0 success, 1 numerical or tolerance failure, 2 bad arguments
// or a power-law index outside the accepted domain.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "blasius/report.hpp"
#include "blasius/transform_solver.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int report_error(const blasius::SolverError& e) {
  std::cerr << "error: " << e.what() << '\n';
  return blasius::is_domain_error(e.code()) ? kExitUsage : kExitFailure;
}

bool write_csv(const std::string& path, const blasius::SolutionProfile& profile) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return false;
  }
  blasius::write_profile_csv(out, profile);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << path << '\n';
    return false;
  }
  return true;
}

struct SolveArgs {
  double p = 1.0;
  std::optional<double> step;
  std::string eta_inf = "10";
  double tol = blasius::AutoBoundary{}.tol;
  std::string out;
};

int run_solve(const SolveArgs& args) {
  try {
    const auto param = blasius::make_parameter(args.p);
    const double step = args.step.value_or(blasius::default_step(args.p));
    blasius::TransformResult result = [&] {
      if (args.eta_inf == "auto") {
        return blasius::solve(param, blasius::AutoBoundary{step, args.tol, 5.0});
      }
      double eta_inf = 0.0;
      try {
        std::size_t used = 0;
        eta_inf = std::stod(args.eta_inf, &used);
        if (used != args.eta_inf.size()) throw std::invalid_argument(args.eta_inf);
      } catch (const std::exception&) {
        throw blasius::SolverError(
            blasius::ErrorCode::InvalidArgument,
            fmt::format("--eta-inf expects a number or 'auto', got '{}'", args.eta_inf));
      }
      return blasius::solve(param, blasius::GridSpec{step, eta_inf});
    }();

    std::cout << blasius::format_solve(result);
    if (!args.out.empty()) {
      const std::string starred = args.out + "_starred.csv";
      const std::string physical = args.out + "_physical.csv";
      if (!write_csv(starred, result.starred) || !write_csv(physical, result.physical)) {
        return kExitFailure;
      }
      std::cout << "wrote " << starred << '\n' << "wrote " << physical << '\n';
    }
    return 0;
  } catch (const blasius::SolverError& e) {
    return report_error(e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-law Blasius boundary layer by the non-iterative transformation method"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve for one power-law index");
  solve->add_option("--p", solve_args.p, "Power-law index P")->required();
  solve->add_option("--step", solve_args.step, "Grid step (default 1e-3, 1e-4 for P <= 0.1)");
  solve->add_option("--eta-inf", solve_args.eta_inf,
                    "Truncated boundary in starred variables, or 'auto'")
      ->default_str("10");
  solve->add_option("--tol", solve_args.tol, "Plateau tolerance for --eta-inf auto")
      ->default_str("1e-8");
  solve->add_option("--out", solve_args.out,
                    "Write <prefix>_starred.csv and <prefix>_physical.csv");

  std::vector<double> table_ps;
  auto* table = app.add_subcommand("table", "Reproduce the published f''(0) table");
  table->add_option("--p-list", table_ps, "Comma-separated indices")->delimiter(',');

  std::vector<double> validate_ps;
  auto* validate = app.add_subcommand("validate", "Cross-check against shooting");
  validate->add_option("--p-list", validate_ps, "Comma-separated indices")
      ->delimiter(',')
      ->required();

  std::vector<double> pohl_ps;
  double pohl_p = 0.0;
  auto* pohl = app.add_subcommand("pohlhausen", "Closed-form Pohlhausen estimate");
  auto* pohl_single = pohl->add_option("--p", pohl_p, "Power-law index P");
  pohl->add_option("--p-list", pohl_ps, "Comma-separated indices")
      ->delimiter(',')
      ->excludes(pohl_single);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*solve) return run_solve(solve_args);

  if (*table) {
    if (table_ps.empty()) table_ps = blasius::default_table_indices();
    const auto report = blasius::run_table(table_ps);
    std::cout << blasius::format_table(report);
    return report.exit_status();
  }

  if (*validate) {
    const auto report = blasius::run_validate(validate_ps);
    std::cout << blasius::format_validate(report);
    return report.exit_status();
  }

  if (*pohl) {
    if (pohl_single->count() > 0) pohl_ps = {pohl_p};
    if (pohl_ps.empty()) {
      for (const auto& row : blasius::reference_table()) pohl_ps.push_back(row.p);
    }
    const auto report = blasius::run_pohlhausen(pohl_ps);
    std::cout << blasius::format_pohlhausen(report);
    return report.exit_status();
  }
  return kExitUsage;
}
