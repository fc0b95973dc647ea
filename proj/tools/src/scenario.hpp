#ifndef DELAYBOUNDS_CLI_SCENARIO_HPP
#define DELAYBOUNDS_CLI_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "delaybounds/instance.hpp"

namespace delaybounds::cli {

/// Inputs of the bound-comparison table: a fixed polynomial and weight,
/// the basis order, the interval, the split-ratio grid and the bound
/// variants to tabulate.
struct CompareSpec {
  std::vector<std::vector<double>> f_coeffs;  // one ascending coefficient list per coordinate
  Matrix w;
  int nu = 1;
  SpaceKind kind = SpaceKind::continuous;
  double a = 0.0;
  double b = 1.0;
  std::vector<double> alpha_grid;
  std::vector<std::string> variants;  // subset of the known variant columns
};

/// Column ids accepted in compare.variants, in table order.
const std::vector<std::string>& compare_variant_names();

/// Parsed and schema-validated scenario document. Unknown fields are
/// rejected; the version field is mandatory.
struct Scenario {
  int version = 1;
  std::vector<std::string> suites;
  InstanceConfig instance;
  std::optional<CompareSpec> compare;
  std::string format = "table";
};

/// Load a scenario from a JSON document. Throws ConfigParseError for
/// missing files, malformed JSON, schema violations or unknown fields.
Scenario load_scenario(const std::string& path);

}  // namespace delaybounds::cli

#endif
