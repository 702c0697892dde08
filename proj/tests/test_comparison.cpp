#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "relfix/comparison.hpp"

using namespace relfix;

TEST_CASE("eval: the three families") {
  const ComparisonFunction lin = ComparisonFunction::linear(0.5);
  const ComparisonFunction rat = ComparisonFunction::ratio();
  const ComparisonFunction tab = ComparisonFunction::table({1.0}, {1.0});
  CHECK(eval_phi(lin, 2.0) == 1.0);
  CHECK(eval_phi(rat, 1.0) == 0.5);
  CHECK(eval_phi(tab, 0.7) == 0.0);
  CHECK(eval_phi(tab, 1.0) == 0.0);  // jumps strictly after the threshold
  CHECK(eval_phi(tab, 3.0) == 1.0);
  CHECK_THROWS_AS(eval_phi(lin, -1.0), std::invalid_argument);
}

TEST_CASE("construction guards reject non-regressive functions") {
  CHECK_THROWS_AS(ComparisonFunction::linear(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ComparisonFunction::linear(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(ComparisonFunction::table({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(ComparisonFunction::table({1.0, 0.5}, {0.2, 0.2}),
                  std::invalid_argument);  // thresholds not increasing
  CHECK_THROWS_AS(ComparisonFunction::table({1.0, 2.0}, {0.8, 0.5}),
                  std::invalid_argument);  // values not nondecreasing
  CHECK_NOTHROW(ComparisonFunction::table({1.0}, {1.0}));  // equality is regressive
}

TEST_CASE("right-limit quantities: continuous families") {
  const auto q = lambda_plus(ComparisonFunction::linear(0.5), 2.0);
  CHECK(q.phi_s == 1.0);
  CHECK(q.lambda_plus == 1.0);
  CHECK(q.lambda_sup == 1.0);
  CHECK_THROWS_AS(lambda_plus(ComparisonFunction::linear(0.5), 0.0),
                  std::invalid_argument);
}

TEST_CASE("right-limit quantities: step jump seen from the right") {
  const auto q = lambda_plus(ComparisonFunction::table({1.0}, {1.0}), 1.0);
  CHECK(q.phi_s == 0.0);
  CHECK(q.lambda_plus == 1.0);
  CHECK(q.lambda_sup == 1.0);
}

TEST_CASE("right-limit chain holds on the default grid") {
  const std::vector<ComparisonFunction> family{
      ComparisonFunction::linear(0.5), ComparisonFunction::ratio(),
      ComparisonFunction::table({1.0}, {1.0}),
      ComparisonFunction::table({1.0, 3.0}, {0.5, 2.0})};
  for (const ComparisonFunction& phi : family) {
    const auto bps = phi.fn().thresholds();
    for (double s : default_grid(bps)) {
      if (!(s > 0.0)) continue;
      const auto q = lambda_plus(phi, s);
      CHECK(0.0 <= q.phi_s);
      CHECK(q.phi_s <= q.lambda_sup);
      CHECK(q.lambda_sup <= s);
    }
  }
}

TEST_CASE("regressivity on the grid") {
  const std::vector<ComparisonFunction> family{
      ComparisonFunction::linear(0.0), ComparisonFunction::linear(0.5),
      ComparisonFunction::ratio(), ComparisonFunction::table({1.0}, {1.0})};
  for (const ComparisonFunction& phi : family)
    for (double t : default_grid(phi.fn().thresholds())) {
      if (!(t > 0.0)) continue;
      CHECK(phi(t) < t);
    }
}

TEST_CASE("right-limit class: analytic proofs and the step refutation") {
  CHECK(classify_boyd_wong(ComparisonFunction::linear(0.5)).verdict == Verdict3::Proven);
  CHECK(classify_boyd_wong(ComparisonFunction::ratio()).verdict == Verdict3::Proven);
  const auto refuted = classify_boyd_wong(ComparisonFunction::table({1.0}, {1.0}));
  CHECK(refuted.verdict == Verdict3::Refuted);
  REQUIRE(refuted.witness.has_value());
  CHECK(*refuted.witness == 1.0);
  // Strict table values stay below the thresholds: exact analysis proves it.
  CHECK(classify_boyd_wong(ComparisonFunction::table({2.0}, {1.0})).verdict ==
        Verdict3::Proven);
}

TEST_CASE("iterate-decay class: closed forms") {
  CHECK(classify_matkowski(ComparisonFunction::linear(0.5)).verdict == Verdict3::Proven);
  const ComparisonFunction rat = ComparisonFunction::ratio();
  CHECK(classify_matkowski(rat).verdict == Verdict3::Proven);
  // n-th iterate of t/(1+t) from t is t/(1+n*t).
  double t = 5.0;
  for (int n = 1; n <= 30; ++n) {
    t = rat(t);
    CHECK(std::abs(t - 5.0 / (1.0 + n * 5.0)) < 1e-12);
  }
  // Two-step collapse for the canonical step table.
  const ComparisonFunction tab = ComparisonFunction::table({1.0}, {1.0});
  CHECK(classify_matkowski(tab).verdict == Verdict3::Proven);
  CHECK(tab(tab(3.0)) == 0.0);
  // A taller table still collapses through its value chain.
  CHECK(classify_matkowski(ComparisonFunction::table({1.0, 2.0, 4.0}, {1.0, 2.0, 3.0}))
            .verdict == Verdict3::Proven);
}

TEST_CASE("iterate-decay class: grid confirmation path") {
  const std::vector<double> grid = default_grid();
  CHECK(classify_matkowski(ComparisonFunction::linear(0.9), grid, 200).verdict ==
        Verdict3::Proven);
}

TEST_CASE("uniform-gap admissibility: routes and direct table analysis") {
  CHECK(classify_meir_keeler(ComparisonFunction::linear(0.5)).verdict ==
        Verdict3::Proven);
  CHECK(classify_meir_keeler(ComparisonFunction::ratio()).verdict == Verdict3::Proven);
  CHECK(classify_meir_keeler(ComparisonFunction::table({1.0}, {1.0})).verdict ==
        Verdict3::Proven);
}

TEST_CASE("admissibility routes are consistent") {
  const std::vector<ComparisonFunction> family{
      ComparisonFunction::linear(0.0),
      ComparisonFunction::linear(0.3),
      ComparisonFunction::linear(0.5),
      ComparisonFunction::ratio(),
      ComparisonFunction::table({1.0}, {1.0}),
      ComparisonFunction::table({2.0}, {1.0}),
      ComparisonFunction::table({1.0, 3.0}, {0.5, 2.0})};
  for (const ComparisonFunction& phi : family) {
    const bool bw = classify_boyd_wong(phi).verdict == Verdict3::Proven;
    const bool mat = classify_matkowski(phi).verdict == Verdict3::Proven;
    if (bw || mat)
      CHECK(classify_meir_keeler(phi).verdict == Verdict3::Proven);
    CHECK(classify_meir_keeler(phi).verdict != Verdict3::Refuted);
  }
}

TEST_CASE("class separation: the canonical step table") {
  const ComparisonFunction tab = ComparisonFunction::table({1.0}, {1.0});
  CHECK(classify_matkowski(tab).verdict == Verdict3::Proven);
  CHECK(classify_boyd_wong(tab).verdict == Verdict3::Refuted);
  CHECK(classify_meir_keeler(tab).verdict == Verdict3::Proven);
}

TEST_CASE("altering pairs: identity psi with a positive linear phi") {
  const AlteringPair p(ScalarFn::linear(1.0), ScalarFn::linear(0.25));
  const auto rep = check_altering_pair(p);
  CHECK(rep.overall() == Verdict3::Proven);
}

TEST_CASE("altering pairs: zero phi is refuted pointwise") {
  const AlteringPair p(ScalarFn::linear(1.0), ScalarFn::linear(0.0));
  const auto rep = check_altering_pair(p);
  CHECK(rep.jump_condition.verdict == Verdict3::Refuted);
  CHECK(rep.overall() == Verdict3::Refuted);
}

TEST_CASE("altering pairs: step psi against a small phi fails at the jump") {
  const AlteringPair p(ScalarFn::table({1.0}, {1.0}), ScalarFn::linear(0.25));
  const auto rep = check_altering_pair(p);
  CHECK(rep.overall() == Verdict3::Refuted);
  REQUIRE(rep.witness().has_value());
  CHECK(*rep.witness() == 1.0);  // the jump site
}

TEST_CASE("altering pairs: step psi cleared by a steep phi") {
  const AlteringPair p(ScalarFn::table({1.0}, {1.0}), ScalarFn::linear(2.0));
  const auto rep = check_altering_pair(p);
  CHECK(rep.overall() == Verdict3::Proven);
}

TEST_CASE("altering pairs: table phi vanishes near zero and is refuted") {
  const AlteringPair p(ScalarFn::linear(1.0), ScalarFn::table({1.0}, {1.0}));
  CHECK(check_altering_pair(p).overall() == Verdict3::Refuted);
}

TEST_CASE("default grid covers the requested range and breakpoints") {
  const std::vector<double> bps{1.0, 3.0};
  const std::vector<double> grid = default_grid(bps);
  CHECK(grid.size() >= 1024);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::find(grid.begin(), grid.end(), 1.0) != grid.end());
  CHECK(std::find(grid.begin(), grid.end(), 2.0) != grid.end());  // midpoint
  CHECK(std::find(grid.begin(), grid.end(), 3.0) != grid.end());
  CHECK(grid.front() >= 1e-6 - 1e-18);
  CHECK(grid.back() <= 1e3 + 1e-9);
}
