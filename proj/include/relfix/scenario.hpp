#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relfix/certify.hpp"
#include "relfix/comparison.hpp"
#include "relfix/metric.hpp"

namespace relfix {

/// Inputs selected by a scenario beyond the instance itself.
struct Selections {
  Functional g = Functional::A1;
  std::optional<ComparisonFunction> phi;
  std::optional<AlteringPair> pair;  // built when a psi line accompanies phi

  friend bool operator==(const Selections&, const Selections&) = default;
};

struct ParseError {
  int line = 0;
  std::string message;
};

struct ParsedScenario {
  std::optional<MetricInstance> instance;
  Selections selections;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty() && instance.has_value(); }
};

/// Line-oriented scenario text:
///   points <n>            | interval <lo> <hi>      (first directive)
///   dist <i> <j> <value>  (finite; symmetric closure; all off-diagonal pairs)
///   map <i> <j>           | map affine <a> <b>
///   rel pair <i> <j> | rel order | rel trivial
///   rel cyclic <p> : <block> ; ... ; <block>
///   rel sigma <n*n values> | rel alphabeta <tables or thresholds>
///   functional <A1|B2|B3|B4|C1|C2>
///   phi linear <c> | phi ratio | phi table <t1> <v1> ...
///   psi linear <c> | psi ratio | psi table <t1> <v1> ...
///   # comment
/// Parse-then-validate: the result is either a fully validated instance or a
/// list of positioned errors.
ParsedScenario parse_scenario(std::string_view text);

/// Canonical text that re-parses to an identical instance and selections.
std::string render_scenario(const MetricInstance& m, const Selections& sel);

/// Exit codes: 0 certified, 1 not certified, 2 input error.
int cmd_certify(const std::string& scenario_text, const CertifyOptions& opts,
                std::ostream& out, std::ostream& err);

/// Exit codes: 0 fixed-point outcome, 1 other outcome, 2 input error.
int cmd_iterate(const std::string& scenario_text, double from,
                std::optional<int> budget, std::optional<double> tol,
                std::ostream& out, std::ostream& err);

struct SearchOptions {
  std::uint64_t seed_lo = 1;
  std::uint64_t seed_hi = 100;
  int max_n = 8;
  double density = 0.3;
  bool cross_check = false;
  bool verbose = false;
  bool inject_fault = false;  // test-only: forge certificates to exercise the flag path
};

struct SearchSummary {
  int generated = 0;
  int certified = 0;
  int gsp_pass = 0;
  int violations = 0;
  std::string render() const;
};

SearchSummary run_search(const SearchOptions& opts, std::ostream& out);

/// Exit codes: 0 when violations stay zero, 1 otherwise.
int cmd_search(const SearchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace relfix
