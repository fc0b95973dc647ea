#ifndef DELAYBOUNDS_SUITES_HPP
#define DELAYBOUNDS_SUITES_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "delaybounds/instance.hpp"

namespace delaybounds {

struct Failure {
  long trial = 0;
  std::string check;
  double observed = 0.0;
  double expected = 0.0;
  double margin = 0.0;
  std::string digest;
};

/// Outcome of one property suite. The failures list is complete (never
/// sampled) and everything except wall_seconds is deterministic in
/// (suite, config, seed).
struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  int n = 0;
  int nu = 0;
  std::string kind;
  long trials = 0;
  std::vector<Failure> failures;
  /// worst observed margin per check; slack- and eigenvalue-type
  /// margins keep their minimum, residual-type margins their maximum
  std::map<std::string, double> worst_margins;
  double wall_seconds = 0.0;

  bool pass() const { return failures.empty(); }
};

/// The ten suite ids, in canonical order.
const std::vector<std::string>& suite_names();

/// Execute one suite. Throws UnknownSuite for unrecognized ids and
/// InvalidConfig for bad configurations.
SuiteReport run_suite(std::string_view id, const InstanceConfig& cfg);

}  // namespace delaybounds

#endif
