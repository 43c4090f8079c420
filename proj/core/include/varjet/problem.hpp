#pragma once

#include "varjet/cdiff.hpp"
#include "varjet/expr.hpp"
#include "varjet/variational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace varjet {

struct ProblemOptions {
  PeelStrategy strategy = PeelStrategy::highest_axis;
  int probes = 5;
  std::uint64_t seed = 0;
};

PeelStrategy strategy_from_name(const std::string& name);  // "default" | "alternate"
const char* strategy_name(PeelStrategy strategy);

/// A variational problem as read from a JSON problem file:
/// {"n": 2, "m": 1, "lagrangian": "u1_{1,0}^2/2 + u1_{0,1}^2/2",
///  "options": {"strategy": "default", "probes": 5, "seed": 0}}.
/// The normal axis is always x_n; the boundary is {x_n = 0}.
struct ProblemSpec {
  int n = 1;
  int m = 1;
  std::string lagrangian;
  ProblemOptions options;

  static ProblemSpec from_json(const std::string& text);
  static ProblemSpec from_file(const std::string& path);

  Context context() const { return {n, m, World::interior}; }
  Expr parse_lagrangian() const;
};

struct ThetaEntry {
  int k = 0;
  int i = 0;
  std::string expr;
};

struct GreenEtaTerm {
  int k = 0;
  std::vector<int> sigma;
  std::string expr;
};

struct GreenReport {
  std::vector<std::string> h;
  // One entry per axis i = 1..n, coefficient table of eta_i.
  std::vector<std::pair<int, std::vector<GreenEtaTerm>>> eta;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

/// Machine/human readable result of one CLI command. Expression strings are
/// canonical prints and re-parse to equal canonical values.
struct Report {
  std::vector<std::string> el;
  std::optional<std::vector<ThetaEntry>> theta;
  std::optional<GreenReport> green;
  std::optional<std::vector<CheckResult>> checks;

  bool all_checks_passed() const;
  std::string to_json() const;  // deterministic for a fixed problem and seed
  std::string to_text() const;
};

Report run_el(const ProblemSpec& problem);
Report run_rel_euler(const ProblemSpec& problem);
Report run_green(const ProblemSpec& problem);

/// The per-problem verification suite surfaced by `varjet check`:
/// first-variation residual, el == euler, theta strategy invariance,
/// a symbolic + numeric Green identity, and the theta order bound.
/// `result` is checked as given, so a tampered result fails.
std::vector<CheckResult> run_checks(const Expr& lagrangian, const RelativeEulerResult& result,
                                    const ProblemOptions& options);
Report run_check(const ProblemSpec& problem);

/// `varjet pullback <expr>`: canonical print of the boundary pullback.
std::string run_pullback(const std::string& expr_text, const Context& ctx);

}  // namespace varjet
