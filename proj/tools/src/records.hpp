#ifndef DELAYBOUNDS_CLI_RECORDS_HPP
#define DELAYBOUNDS_CLI_RECORDS_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "delaybounds/linalg.hpp"
#include "delaybounds/suites.hpp"

namespace delaybounds::cli {

/// Order-preserving JSON value for line-delimited records. Numbers are
/// emitted with 17 significant digits so a standard parser recovers the
/// exact double.
class JsonValue {
 public:
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue string(std::string s);
  static JsonValue array();
  static JsonValue object();
  static JsonValue vector(const Vector& v);
  static JsonValue matrix(const Matrix& m);

  JsonValue& push_back(JsonValue v);
  JsonValue& set(std::string key, JsonValue v);

  std::string dump() const;

 private:
  struct Object {
    std::vector<std::pair<std::string, JsonValue>> fields;
  };
  struct Array {
    std::vector<JsonValue> items;
  };
  std::variant<double, long long, bool, std::string, Object, Array> value_ = 0.0;
};

/// One-line JSON record of a suite report; timing is optional so
/// canonical (reproducibility) comparisons can exclude it.
JsonValue suite_report_record(const SuiteReport& rep, bool with_timing = true);

}  // namespace delaybounds::cli

#endif
