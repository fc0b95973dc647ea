#include <CLI11.hpp>
#include <cstdio>
#include <exception>

#include "commands.hpp"
#include "delaybounds/errors.hpp"

int main(int argc, char** argv) {
  using delaybounds::cli::CliOptions;

  CLI::App app{"delaybounds: lower bounds for weighted quadratic integrals and sums,\n"
               "their equivalence transforms, and randomized verification suites"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string scenario_path;
  std::string kind;
  unsigned long long seed_flag = 0;
  long trials_flag = 0;
  long budget_flag = 0;
  double tol_flag = 0.0;
  std::string format_flag;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed_flag, "override the random seed");
    cmd->add_option("--budget", budget_flag, "override the search budget");
    cmd->add_option("--tol", tol_flag, "override every comparison tolerance");
    cmd->add_option("--out", opts.out_dir, "directory for report files");
    cmd->add_option("--format", format_flag, "stdout format")
        ->check(CLI::IsMember({"table", "records"}));
  };
  auto harvest_common = [&](CLI::App* cmd) {
    if (cmd->count("--seed")) opts.seed = seed_flag;
    if (cmd->count("--budget")) opts.budget = budget_flag;
    if (cmd->count("--tol")) opts.tol = tol_flag;
    if (cmd->count("--format")) opts.format = format_flag;
  };

  CLI::App* verify = app.add_subcommand("verify", "run property suites from a scenario file");
  verify->add_option("scenario", scenario_path, "scenario JSON document")->required();
  verify->add_option("--trials", trials_flag, "override the per-suite trial count");
  add_common(verify);

  CLI::App* compare = app.add_subcommand("compare", "tabulate the bound family over a split grid");
  compare->add_option("scenario", scenario_path, "scenario JSON document with a compare section")
      ->required();
  add_common(compare);

  CLI::App* search = app.add_subcommand("search", "randomized counterexample search");
  search->add_option("kind", kind, "which reverse implication to refute")
      ->required()
      ->check(CLI::IsMember({"B", "D"}));
  search->add_option("--n", opts.search_n, "state dimension");
  search->add_option("--nu", opts.search_nu, "basis order");
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) {
      harvest_common(verify);
      if (verify->count("--trials")) opts.trials = trials_flag;
      return delaybounds::cli::cmd_verify(scenario_path, opts);
    }
    if (compare->parsed()) {
      harvest_common(compare);
      return delaybounds::cli::cmd_compare(scenario_path, opts);
    }
    harvest_common(search);
    return delaybounds::cli::cmd_search(kind, opts);
  } catch (const delaybounds::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
