#include "scenario.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "delaybounds/suites.hpp"

namespace delaybounds::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end())
      throw ConfigParseError("unknown field '" + key + "' in " + where);
  }
}

double number_at(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ConfigParseError(std::string("field '") + key + "' must be a number");
  return obj[key].get<double>();
}

long integer_at(const json& obj, const char* key, long fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer())
    throw ConfigParseError(std::string("field '") + key + "' must be an integer");
  return obj[key].get<long>();
}

SpaceKind kind_at(const json& obj, const char* key, SpaceKind fallback) {
  if (!obj.contains(key)) return fallback;
  const std::string s = obj[key].get<std::string>();
  if (s == "continuous") return SpaceKind::continuous;
  if (s == "discrete") return SpaceKind::discrete;
  throw ConfigParseError("space kind must be 'continuous' or 'discrete', got '" + s + "'");
}

Tolerances parse_tolerances(const json& obj) {
  reject_unknown(obj,
                 {"all", "soundness", "equality", "psd_margin", "identity", "tight", "orth",
                  "witness_margin"},
                 "tolerances");
  Tolerances tol;
  if (obj.contains("all")) {
    const double v = obj["all"].get<double>();
    tol.soundness = tol.equality = tol.psd_margin = tol.identity = tol.tight = tol.orth = v;
  }
  tol.soundness = number_at(obj, "soundness", tol.soundness);
  tol.equality = number_at(obj, "equality", tol.equality);
  tol.psd_margin = number_at(obj, "psd_margin", tol.psd_margin);
  tol.identity = number_at(obj, "identity", tol.identity);
  tol.tight = number_at(obj, "tight", tol.tight);
  tol.orth = number_at(obj, "orth", tol.orth);
  tol.witness_margin = number_at(obj, "witness_margin", tol.witness_margin);
  return tol;
}

InstanceConfig parse_instance(const json& obj) {
  reject_unknown(obj, {"n", "nu", "kind", "a", "b", "split_fraction", "degree", "trials"},
                 "instance");
  InstanceConfig cfg;
  cfg.n = static_cast<int>(integer_at(obj, "n", cfg.n));
  cfg.nu = static_cast<int>(integer_at(obj, "nu", cfg.nu));
  cfg.kind = kind_at(obj, "kind", cfg.kind);
  cfg.split_fraction = number_at(obj, "split_fraction", cfg.split_fraction);
  cfg.degree = static_cast<int>(integer_at(obj, "degree", cfg.degree));
  cfg.trials = integer_at(obj, "trials", cfg.trials);
  return cfg;
}

CompareSpec parse_compare(const json& obj) {
  reject_unknown(obj, {"f", "W", "nu", "kind", "a", "b", "alpha_grid", "variants"}, "compare");
  CompareSpec spec;
  if (!obj.contains("f") || !obj["f"].is_array() || obj["f"].empty())
    throw ConfigParseError("compare.f must be a nonempty array of coefficient lists");
  for (const auto& row : obj["f"]) {
    if (!row.is_array()) throw ConfigParseError("compare.f entries must be coefficient arrays");
    spec.f_coeffs.push_back(row.get<std::vector<double>>());
  }
  if (!obj.contains("W") || !obj["W"].is_array())
    throw ConfigParseError("compare.W must be a square matrix (array of rows)");
  const auto rows = obj["W"].get<std::vector<std::vector<double>>>();
  const size_t n = rows.size();
  spec.w = Matrix(n, n);
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ConfigParseError("compare.W must be square");
    for (size_t j = 0; j < n; ++j) spec.w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  if (spec.f_coeffs.size() != n)
    throw ConfigParseError("compare.f and compare.W disagree on the state dimension");
  spec.nu = static_cast<int>(integer_at(obj, "nu", 1));
  spec.kind = kind_at(obj, "kind", SpaceKind::continuous);
  if (spec.kind != SpaceKind::continuous)
    throw ConfigParseError("compare works on continuous intervals");
  spec.a = number_at(obj, "a", 0.0);
  spec.b = number_at(obj, "b", 1.0);
  if (!(spec.a < spec.b)) throw ConfigParseError("compare requires a < b");
  if (!obj.contains("alpha_grid") || !obj["alpha_grid"].is_array())
    throw ConfigParseError("compare.alpha_grid must be an array");
  spec.alpha_grid = obj["alpha_grid"].get<std::vector<double>>();
  if (spec.alpha_grid.empty()) throw ConfigParseError("compare.alpha_grid must not be empty");
  for (double alpha : spec.alpha_grid)
    if (!(alpha > 0.0 && alpha < 1.0))
      throw ConfigParseError("compare.alpha_grid values must lie in (0, 1)");
  spec.variants = compare_variant_names();
  if (obj.contains("variants")) {
    if (!obj["variants"].is_array())
      throw ConfigParseError("compare.variants must be an array of column names");
    spec.variants = obj["variants"].get<std::vector<std::string>>();
    if (spec.variants.empty()) throw ConfigParseError("compare.variants must not be empty");
    const auto& known = compare_variant_names();
    for (const std::string& v : spec.variants)
      if (std::find(known.begin(), known.end(), v) == known.end())
        throw ConfigParseError("unknown compare variant: " + v);
  }
  return spec;
}

}  // namespace

const std::vector<std::string>& compare_variant_names() {
  static const std::vector<std::string> names = {"dbbi", "dsfmb", "mlsr", "erc",
                                                 "serc", "merc",  "rcc"};
  return names;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot open scenario file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigParseError("scenario is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigParseError("scenario must be a JSON object");
  reject_unknown(doc,
                 {"version", "seed", "suites", "instance", "budget", "tolerances", "compare",
                  "output"},
                 "scenario");
  if (!doc.contains("version")) throw ConfigParseError("scenario is missing the version field");
  Scenario sc;
  sc.version = doc["version"].get<int>();
  if (sc.version != 1)
    throw ConfigParseError("unsupported scenario version " + std::to_string(sc.version));

  if (doc.contains("instance")) sc.instance = parse_instance(doc["instance"]);
  sc.instance.seed = static_cast<uint64_t>(integer_at(doc, "seed", 1));
  sc.instance.budget = integer_at(doc, "budget", sc.instance.budget);
  if (doc.contains("tolerances")) sc.instance.tol = parse_tolerances(doc["tolerances"]);

  if (doc.contains("suites")) {
    if (!doc["suites"].is_array()) throw ConfigParseError("suites must be an array of suite ids");
    sc.suites = doc["suites"].get<std::vector<std::string>>();
    const auto& known = suite_names();
    for (const std::string& s : sc.suites)
      if (std::find(known.begin(), known.end(), s) == known.end())
        throw ConfigParseError("unknown suite id: " + s);
  }

  if (doc.contains("compare")) sc.compare = parse_compare(doc["compare"]);

  if (doc.contains("output")) {
    reject_unknown(doc["output"], {"format"}, "output");
    if (doc["output"].contains("format")) {
      sc.format = doc["output"]["format"].get<std::string>();
      if (sc.format != "table" && sc.format != "records")
        throw ConfigParseError("output.format must be 'table' or 'records'");
    }
  }
  return sc;
}

}  // namespace delaybounds::cli
