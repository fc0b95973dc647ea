#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "delaybounds/relations.hpp"
#include "delaybounds/single_interval.hpp"
#include "delaybounds/suites.hpp"
#include "delaybounds/two_interval.hpp"
#include "delaybounds/weight_blocks.hpp"
#include "records.hpp"
#include "scenario.hpp"

namespace delaybounds::cli {

namespace {

namespace fs = std::filesystem;

uint64_t resolve_seed(const CliOptions& opts, uint64_t scenario_seed) {
  if (opts.seed) return *opts.seed;
  if (const char* env = std::getenv("DELAYBOUNDS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return static_cast<uint64_t>(v);
    throw ConfigParseError("DELAYBOUNDS_SEED is not an unsigned integer");
  }
  return scenario_seed;
}

void apply_overrides(InstanceConfig& cfg, const CliOptions& opts) {
  cfg.seed = resolve_seed(opts, cfg.seed);
  if (opts.trials) cfg.trials = *opts.trials;
  if (opts.budget) cfg.budget = *opts.budget;
  if (opts.tol) {
    const double v = *opts.tol;
    cfg.tol.soundness = cfg.tol.equality = cfg.tol.psd_margin = v;
    cfg.tol.identity = cfg.tol.tight = cfg.tol.orth = v;
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ConfigParseError("cannot write report file: " + path.string());
  out << content;
}

std::string human_suite_report(const SuiteReport& rep) {
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof(buf), "suite: %-24s %s\n", rep.suite.c_str(),
                rep.pass() ? "PASS" : "FAIL");
  out += buf;
  std::snprintf(buf, sizeof(buf),
                "seed: %llu  n: %d  nu: %d  kind: %s  trials: %ld  wall: %.3f s\n",
                static_cast<unsigned long long>(rep.seed), rep.n, rep.nu, rep.kind.c_str(),
                rep.trials, rep.wall_seconds);
  out += buf;
  out += "worst margins:\n";
  for (const auto& [key, value] : rep.worst_margins) {
    std::snprintf(buf, sizeof(buf), "  %-32s % .6e\n", key.c_str(), value);
    out += buf;
  }
  if (rep.failures.empty()) {
    out += "failures: none\n";
  } else {
    std::snprintf(buf, sizeof(buf), "failures: %zu\n", rep.failures.size());
    out += buf;
    for (const Failure& f : rep.failures) {
      std::snprintf(buf, sizeof(buf), "  trial %-6ld %-28s observed=% .10e expected=% .10e\n",
                    f.trial, f.check.c_str(), f.observed, f.expected);
      out += buf;
    }
  }
  return out;
}

}  // namespace

int cmd_verify(const std::string& scenario_path, const CliOptions& opts) {
  Scenario sc = load_scenario(scenario_path);
  if (sc.suites.empty()) sc.suites = suite_names();
  apply_overrides(sc.instance, opts);
  const std::string format = opts.format.value_or(sc.format);

  fs::create_directories(opts.out_dir);
  bool all_pass = true;
  JsonValue summary_lines = JsonValue::array();
  std::string summary_text;

  for (const std::string& suite : sc.suites) {
    const SuiteReport rep = run_suite(suite, sc.instance);
    all_pass = all_pass && rep.pass();

    const std::string record_line = suite_report_record(rep).dump();
    write_file(fs::path(opts.out_dir) / (suite + ".jsonl"), record_line + "\n");
    write_file(fs::path(opts.out_dir) / (suite + ".txt"), human_suite_report(rep));

    JsonValue summary = JsonValue::object();
    summary.set("record", JsonValue::string("suite_summary"));
    summary.set("suite", JsonValue::string(suite));
    summary.set("pass", JsonValue::boolean(rep.pass()));
    summary.set("trials", JsonValue::integer(rep.trials));
    summary.set("failures", JsonValue::integer(static_cast<long long>(rep.failures.size())));
    summary.set("wall_seconds", JsonValue::number(rep.wall_seconds));
    summary_text += summary.dump() + "\n";

    if (format == "records") {
      std::cout << record_line << "\n";
    } else {
      std::printf("[%s] %-24s trials=%-6ld failures=%-4zu wall=%.2fs\n",
                  rep.pass() ? "PASS" : "FAIL", suite.c_str(), rep.trials, rep.failures.size(),
                  rep.wall_seconds);
    }
  }
  write_file(fs::path(opts.out_dir) / "summary.jsonl", summary_text);
  if (format != "records")
    std::printf("%s: reports in %s\n", all_pass ? "all suites passed" : "suite failures detected",
                opts.out_dir.c_str());
  return all_pass ? 0 : 2;
}

int cmd_compare(const std::string& scenario_path, const CliOptions& opts) {
  const Scenario sc = load_scenario(scenario_path);
  if (!sc.compare)
    throw ConfigParseError("scenario has no compare section (f, W, nu, interval, alpha_grid)");
  const CompareSpec& spec = *sc.compare;
  const std::string format = opts.format.value_or(sc.format);
  const double tol = opts.tol.value_or(1e-9);

  std::vector<Polynomial> coords;
  coords.reserve(spec.f_coeffs.size());
  for (const auto& c : spec.f_coeffs) coords.emplace_back(c);
  const VectorPolynomial f(std::move(coords));
  const int nu = spec.nu;
  const int n = f.dim();
  const int m1 = (nu + 1) * n;

  const Space d0 = Space::continuous(spec.a, spec.b);
  const Basis b0 = Basis::build(d0, nu);
  const WeightLadder wl(nu, spec.w);
  const double exact = exact_energy(d0, f, spec.w);
  const double bbi_single =
      bbi_bound(moments(d0, b0, f).stacked(), WeightBlocks(b0.rho(), spec.w).cal());

  // alpha-independent canonical parameters for the convexified columns
  Matrix e1 = Matrix::Zero(2 * m1, m1);
  e1.topRows(m1) = wl.mat();
  Matrix e2 = Matrix::Zero(2 * m1, m1);
  e2.bottomRows(m1) = wl.mat();
  const Matrix zero_m1 = Matrix::Zero(m1, m1);

  fs::create_directories(opts.out_dir);
  std::string records_text;
  std::string table;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%7s %12s %12s", "alpha", "exact", "bbi1");
  table += buf;
  for (const std::string& v : spec.variants) {
    std::snprintf(buf, sizeof(buf), " %12s", v == "dsfmb" ? "dsfmb*" : v.c_str());
    table += buf;
  }
  table += "    ok\n";

  bool all_ok = true;
  for (const double alpha : spec.alpha_grid) {
    const SplitGeometry g = SplitGeometry::from_alpha(spec.b - spec.a, alpha);
    const double c = spec.a + alpha * (spec.b - spec.a);
    auto [d1, d2] = d0.split(c);
    const Basis b1 = Basis::build(d1, nu);
    const Basis b2 = Basis::build(d2, nu);
    const Vector w = stack_moments(moments(d1, b1, f), moments(d2, b2, f)).stacked();

    const double v_dbbi = dbbi_bound(w, omega_b(g, wl), g.h);
    const FmbParams opt{-e1 / (g.alpha * g.h), -e2 / (g.beta * g.h)};
    std::map<std::string, double> value;
    value["dbbi"] = v_dbbi;
    value["dsfmb"] = dsfmb_bound(w, omega_f(g, opt, wl), g.h);
    value["mlsr"] = convexified_bound(w, omega_mlsr(g, MlsrParams{e1, e2}, wl), g.h);
    value["erc"] = convexified_bound(
        w, omega_erc(g, ErcParams{zero_m1, zero_m1, zero_m1, zero_m1}, wl), g.h);
    value["serc"] = convexified_bound(w, omega_serc(g, SercParams{zero_m1, zero_m1}, wl), g.h);
    value["merc"] = convexified_bound(w, omega_merc(g, MercParams{zero_m1}, wl), g.h);
    value["rcc"] = convexified_bound(w, omega_rcc(g, RccParams{zero_m1}, wl), g.h);

    auto leq = [&](double lhs, double rhs) {
      return lhs <= rhs + tol * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    };
    bool ok = leq(v_dbbi, exact) && leq(bbi_single, exact);
    for (const std::string& v : spec.variants)
      ok = ok && leq(value[v], v_dbbi) && leq(value[v], exact);
    all_ok = all_ok && ok;

    std::snprintf(buf, sizeof(buf), "%7.4f %12.6f %12.6f", alpha, exact, bbi_single);
    table += buf;
    for (const std::string& v : spec.variants) {
      std::snprintf(buf, sizeof(buf), " %12.6f", value[v]);
      table += buf;
    }
    table += ok ? "    ok\n" : "  VIOL\n";

    JsonValue row = JsonValue::object();
    row.set("record", JsonValue::string("compare_row"));
    row.set("alpha", JsonValue::number(alpha));
    row.set("exact", JsonValue::number(exact));
    row.set("bbi_single", JsonValue::number(bbi_single));
    for (const std::string& v : spec.variants)
      row.set(v == "dsfmb" ? "dsfmb_opt" : v, JsonValue::number(value[v]));
    row.set("ordering_ok", JsonValue::boolean(ok));
    records_text += row.dump() + "\n";
  }

  write_file(fs::path(opts.out_dir) / "compare.jsonl", records_text);
  write_file(fs::path(opts.out_dir) / "compare.txt", table);
  std::cout << (format == "records" ? records_text : table);
  return all_ok ? 0 : 2;
}

int cmd_search(const std::string& kind, const CliOptions& opts) {
  const SearchKind k = (kind == "B") ? SearchKind::B : SearchKind::D;
  const uint64_t seed = resolve_seed(opts, 1);
  const long budget = opts.budget.value_or(10000);

  SearchConfig cfg;
  cfg.n = opts.search_n;
  cfg.nu = opts.search_nu;
  const SearchOutcome out = counterexample_search(k, seed, budget, cfg);

  JsonValue rec = JsonValue::object();
  rec.set("record", JsonValue::string("witness"));
  rec.set("kind", JsonValue::string(kind));
  rec.set("found", JsonValue::boolean(out.found));
  rec.set("seed", JsonValue::integer(static_cast<long long>(out.seed)));
  rec.set("budget", JsonValue::integer(budget));
  rec.set("trials_used", JsonValue::integer(out.trials_used));
  rec.set("n", JsonValue::integer(out.n));
  rec.set("nu", JsonValue::integer(out.nu));
  rec.set("sweep_size", JsonValue::integer(out.sweep_size));
  if (out.found) {
    rec.set("alpha", JsonValue::number(out.alpha));
    rec.set(k == SearchKind::B ? "V1" : "Y1", JsonValue::matrix(out.v1));
    rec.set(k == SearchKind::B ? "V2" : "Y2", JsonValue::matrix(out.v2));
    rec.set("W", JsonValue::matrix(out.w));
    rec.set("witness_neg", JsonValue::vector(out.witness_neg));
    rec.set("witness_pos", JsonValue::vector(out.witness_pos));
    rec.set("quad_neg", JsonValue::number(out.quad_neg));
    rec.set("quad_pos", JsonValue::number(out.quad_pos));
  }

  fs::create_directories(opts.out_dir);
  const std::string line = rec.dump() + "\n";
  write_file(fs::path(opts.out_dir) / ("witness_" + kind + ".jsonl"), line);
  std::cout << line;
  if (!out.found) {
    std::fprintf(stderr, "search %s: budget %ld exhausted without a witness\n", kind.c_str(),
                 budget);
    return 3;
  }
  std::printf("search %s: witness found after %ld trials (quad- %.3e, quad+ %.3e)\n", kind.c_str(),
              out.trials_used, out.quad_neg, out.quad_pos);
  return 0;
}

}  // namespace delaybounds::cli
