#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "sastri/cli.hpp"

namespace sastri::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve side-angle-side triangles through the Law of Sines", "sastri"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one SAS triangle");
  solve_cmd->add_option("--a", solve.a, "Side a (opposite theta)")->required();
  solve_cmd->add_option("--b", solve.b, "Side b (opposite phi)")->required();
  auto* omega_opt = solve_cmd->add_option("--omega-deg", solve.omega_deg, "Included angle in degrees");
  auto* half_opt =
      solve_cmd->add_option("--tan-half-omega", solve.tan_half_omega, "tan(omega/2) instead of omega");
  omega_opt->excludes(half_opt);
  solve_cmd->add_option("--method", solve.method, "sines | cosines | both")
      ->check(CLI::IsMember({"sines", "cosines", "both"}));
  solve_cmd->add_option("--format", solve.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  BatchArgs batch;
  auto* batch_cmd = app.add_subcommand("batch", "Solve every a,b,omega_deg row of a CSV file");
  batch_cmd->add_option("--input", batch.input, "CSV file with rows a,b,omega_deg")->required();
  batch_cmd->add_option("--method", batch.method, "sines | cosines")
      ->check(CLI::IsMember({"sines", "cosines"}));
  batch_cmd->add_option("--format", batch.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate the a/b = r, omega = 60 family as CSV");
  sweep_cmd->add_option("--r-min", sweep.r_min, "Smallest ratio (> 1)")->required();
  sweep_cmd->add_option("--r-max", sweep.r_max, "Largest ratio")->required();
  sweep_cmd->add_option("--n", sweep.n, "Number of geometrically spaced samples (>= 2)")->required();
  sweep_cmd->add_option("--b", sweep.b, "Side b")->capture_default_str();

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Compare both routes against the extended-precision reference");
  compare_cmd->add_option("--regime", compare.regime, "well_conditioned | thin_isoceles | near_straight | extreme_ratio | all")
      ->check(CLI::IsMember({"well_conditioned", "thin_isoceles", "near_straight", "extreme_ratio", "all"}))
      ->capture_default_str();
  compare_cmd->add_option("--count", compare.count, "Problems per regime")->capture_default_str();
  compare_cmd->add_option("--seed", compare.seed, "Generator seed")->capture_default_str();
  compare_cmd->add_option("--format", compare.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
  if (batch_cmd->parsed()) return cmd_batch(batch, out, err);
  if (sweep_cmd->parsed()) return cmd_sweep(sweep, out, err);
  return cmd_compare(compare, out, err);
}

}  // namespace sastri::cli
