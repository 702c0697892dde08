#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "relfix/builders.hpp"
#include "relfix/oracle.hpp"
#include "relfix/picard.hpp"

using namespace relfix;
using relfix::testing::banach_instance;
using relfix::testing::chain_instance;
using relfix::testing::swap_instance;

namespace {

// Rotation by one step around an 8-point circle with half-unit arcs.
MetricInstance rotation_instance() {
  const int n = 8;
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int gap = std::min(std::abs(i - j), n - std::abs(i - j));
      d(i, j) = 0.5 * gap;
    }
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = (i + 1) % n;
  return MetricInstance(FiniteInstance(d, map, FiniteRelation::full(n)));
}

}  // namespace

TEST_CASE("iterate: chain orbit stabilizes in one step") {
  const OrbitTrace t = iterate(chain_instance(), 0.0, 16, 0.0);
  CHECK(t.points == std::vector<double>{0.0, 1.0, 1.0});
  CHECK(t.rho == std::vector<double>{1.0, 0.0});
  CHECK(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
  CHECK(t.outcome.value == 1.0);
  CHECK(t.outcome.steps == 1);
  CHECK(t.strict_descent);
  CHECK(t.injective_prefix);
  CHECK(t.semi_cauchy);
}

TEST_CASE("iterate: halving map matches its closed form") {
  const OrbitTrace t = iterate(banach_instance(), 0.0, 100, 1e-9);
  CHECK(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
  CHECK(t.outcome.steps == 31);
  for (std::size_t n = 0; n < t.points.size(); ++n)
    CHECK(std::abs(std::abs(t.points[n] - 2.0) - std::ldexp(1.0, 1 - static_cast<int>(n))) <=
          1e-12);
  for (std::size_t n = 0; n < t.rho.size(); ++n)
    CHECK(t.rho[n] == std::ldexp(1.0, -static_cast<int>(n)));
  CHECK(t.strict_descent);
  CHECK(t.injective_prefix);
  CHECK(t.semi_cauchy);
}

TEST_CASE("iterate: swap orbit is a two-cycle") {
  const OrbitTrace t = iterate(swap_instance(), 0.0, 16, 0.0);
  CHECK(t.outcome.kind == OrbitOutcome::Kind::Cycle);
  CHECK(t.outcome.period == 2);
  CHECK(t.outcome.entry == 0);
  CHECK_FALSE(t.strict_descent);  // constant displacements
  CHECK_FALSE(t.semi_cauchy);
}

TEST_CASE("iterate: start validation") {
  CHECK_THROWS_AS(iterate(chain_instance(), 99.0, 16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(iterate(chain_instance(), 0.5, 16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(iterate(banach_instance(), -1.0, 16, 1e-9), std::invalid_argument);
}

TEST_CASE("tail estimate: geometric orbit") {
  const MetricInstance m = banach_instance();
  const OrbitTrace t = iterate(m, 0.0, 100, 1e-9);
  CHECK(cauchy_estimate_check(t, m, 0.5, 0.25, 1) == CheckOutcome::Holds);
}

TEST_CASE("tail estimate: stabilized orbit holds trivially") {
  const MetricInstance m = chain_instance();
  const OrbitTrace t = iterate(m, 0.0, 16, 0.0);
  CHECK(cauchy_estimate_check(t, m, 0.25, 0.1, 1) == CheckOutcome::Holds);
}

TEST_CASE("tail estimate: rotation orbit violates it") {
  const MetricInstance m = rotation_instance();
  const OrbitTrace t = iterate(m, 0.0, 32, 0.0);
  // Displacements sit at 0.5 forever; a margin quiet enough to apply needs
  // delta > 2, and the far side of the circle then breaks the bound.
  CHECK(cauchy_estimate_check(t, m, 0.1, 2.2, 1) == CheckOutcome::Violated);
  // With a small margin the trace never quiets down.
  CHECK(cauchy_estimate_check(t, m, 0.1, 0.4, 1) == CheckOutcome::NotApplicable);
}

TEST_CASE("global verdict: chain instance converges from every progressive start") {
  const MetricInstance m = chain_instance();
  const CertificationReport rep = certify(m, Functional::A1);
  REQUIRE(rep.certified);
  const GspResult gsp = verify_gsp(m, Functional::A1, rep, default_budget(m), 0.0);
  CHECK(gsp.verdict.kind == VerdictKind::Pass);
  CHECK_FALSE(gsp.theorem_violation);
  REQUIRE(gsp.traces.size() == 2);
  for (const OrbitTrace& t : gsp.traces) {
    CHECK(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
    CHECK(t.outcome.value == 1.0);
  }
}

TEST_CASE("global verdict: interval halving map converges within tolerance") {
  const MetricInstance m = banach_instance();
  const CertificationReport rep =
      certify(m, Functional::A1, ComparisonFunction::linear(0.5), std::nullopt);
  REQUIRE(rep.certified);
  const GspResult gsp = verify_gsp(m, Functional::A1, rep, 10000, 1e-9);
  CHECK(gsp.verdict.kind == VerdictKind::Pass);
  for (const OrbitTrace& t : gsp.traces) {
    CHECK(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
    CHECK(std::abs(t.outcome.value - 2.0) <= 1e-8);
  }
}

TEST_CASE("global verdict: refuses uncertified reports") {
  const MetricInstance m = swap_instance();
  const CertificationReport rep = certify(m, Functional::A1);
  REQUIRE_FALSE(rep.certified);
  CHECK_THROWS_AS(verify_gsp(m, Functional::A1, rep, 16, 0.0), std::invalid_argument);
}

TEST_CASE("global verdict: forged certificates raise the violation flag") {
  const MetricInstance m = swap_instance();
  CertificationReport rep = certify(m, Functional::A1);
  REQUIRE_FALSE(rep.certified);
  rep.certified = true;  // forged
  rep.via = 1;
  const GspResult gsp = verify_gsp(m, Functional::A1, rep, 16, 0.0);
  CHECK(gsp.verdict.kind == VerdictKind::Fail);
  CHECK(gsp.theorem_violation);
  CHECK(gsp.note.find("THEOREM-VIOLATION") != std::string::npos);
}

TEST_CASE("certified instances stabilize with clean diagnostics") {
  int certified = 0;
  for (std::uint64_t seed = 3000; seed < 3400; ++seed) {
    const MetricInstance m = random_instance(
        seed, 2 + static_cast<int>(seed % 7), 0.4, static_cast<MapKind>(seed % 3),
        seed % 2 ? MetricKind::RandomTable : MetricKind::LineEmbedding);
    const CertificationReport rep = certify(m, Functional::A1);
    if (!rep.certified) continue;
    ++certified;
    const GspResult gsp = verify_gsp(m, Functional::A1, rep, default_budget(m), 0.0);
    CHECK(gsp.verdict.kind == VerdictKind::Pass);
    const auto fixed = oracle::brute_fixed_points(*m.finite());
    for (const OrbitTrace& t : gsp.traces) {
      CHECK(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
      CHECK(t.strict_descent);
      CHECK(t.injective_prefix);
      CHECK(fixed.count(static_cast<int>(t.outcome.value)) == 1);
    }
  }
  CHECK(certified > 20);
}

TEST_CASE("geometric convergence rate from every start") {
  const MetricInstance m = banach_instance();
  for (double x0 : {0.0, 0.5, 1.0, 1.7}) {
    const OrbitTrace t = iterate(m, x0, 100, 1e-9);
    REQUIRE(t.outcome.kind == OrbitOutcome::Kind::FixedPoint);
    for (std::size_t n = 0; n < t.points.size(); ++n)
      CHECK(std::abs(t.points[n] - 2.0) <=
            std::pow(0.5, static_cast<double>(n)) * std::abs(x0 - 2.0) + 1e-12);
  }
}
