#ifndef DELAYBOUNDS_CLI_COMMANDS_HPP
#define DELAYBOUNDS_CLI_COMMANDS_HPP

#include <optional>
#include <string>

namespace delaybounds::cli {

/// Flag overrides shared by the subcommands. Seed precedence:
/// --seed, then the DELAYBOUNDS_SEED environment variable, then the
/// scenario document.
struct CliOptions {
  std::optional<uint64_t> seed;
  std::optional<long> trials;
  std::optional<long> budget;
  std::optional<double> tol;
  std::string out_dir = "reports";
  std::optional<std::string> format;
  int search_n = 1;
  int search_nu = 0;
};

/// Exit codes: 0 all suites pass, 1 usage/config error, 2 any suite failure.
int cmd_verify(const std::string& scenario_path, const CliOptions& opts);

/// Exit codes: 0 table written, 1 usage/config error, 2 ordering violation.
int cmd_compare(const std::string& scenario_path, const CliOptions& opts);

/// Exit codes: 0 witness found, 1 usage error, 3 budget exhausted.
int cmd_search(const std::string& kind, const CliOptions& opts);

}  // namespace delaybounds::cli

#endif
