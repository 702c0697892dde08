#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "relfix/builders.hpp"
#include "relfix/metric.hpp"
#include "relfix/numeric.hpp"

using namespace relfix;
using relfix::testing::banach_instance;
using relfix::testing::chain_instance;

namespace {

MetricInstance table_instance(std::initializer_list<double> upper, int n,
                              std::vector<int> map) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  auto it = upper.begin();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      d(i, j) = *it;
      d(j, i) = *it;
      ++it;
    }
  return MetricInstance(FiniteInstance(d, std::move(map), FiniteRelation::full(n)));
}

}  // namespace

TEST_CASE("functional classes partition as expected") {
  using F = Functional;
  for (F f : {F::A1, F::B2, F::B4, F::C1}) {
    CHECK(is_contraction_functional(f));
    CHECK(in_class_g1(f));
    CHECK_FALSE(in_class_g2(f));
  }
  for (F f : {F::B3, F::C2}) {
    CHECK(is_contraction_functional(f));
    CHECK(in_class_g2(f));
    CHECK_FALSE(in_class_g1(f));
  }
  for (F f : {F::A2, F::A3, F::A4, F::B1}) CHECK_FALSE(is_contraction_functional(f));
}

TEST_CASE("metric axioms: line restriction is clean") {
  CHECK(verify_metric_axioms(chain_instance()).empty());
  CHECK(verify_metric_axioms(banach_instance()).empty());
}

TEST_CASE("metric axioms: triangle violation is reported with its triple") {
  const MetricInstance m = table_instance({1.0, 5.0, 1.0}, 3, {0, 1, 2});
  const auto violations = verify_metric_axioms(m);
  REQUIRE_FALSE(violations.empty());
  bool found = false;
  for (const auto& v : violations)
    if (v.kind == AxiomViolation::Kind::Triangle) found = true;
  CHECK(found);
}

TEST_CASE("metric axioms: zero distance between distinct points") {
  const MetricInstance m = table_instance({0.0, 1.0, 1.0}, 3, {0, 1, 2});
  const auto violations = verify_metric_axioms(m);
  bool found = false;
  for (const auto& v : violations)
    if (v.kind == AxiomViolation::Kind::Sufficiency && v.i == 0 && v.j == 1) found = true;
  CHECK(found);
}

TEST_CASE("distance map is Lipschitz in both pairs") {
  const MetricInstance chain = chain_instance();
  const FiniteInstance& m = *chain.finite();
  CHECK(lipschitz_inequality_check(m, 0, 2, 0, 2));  // zero left side
  CHECK(lipschitz_inequality_check(m, 0, 2, 1, 1));  // |2-0| <= 1+1
}

TEST_CASE("distance map Lipschitz property on random instances") {
  std::mt19937_64 rng(21);
  for (int inst = 0; inst < 20; ++inst) {
    const MetricInstance m = random_instance(
        1000 + inst, 6, 0.5, MapKind::Arbitrary,
        inst % 2 ? MetricKind::RandomTable : MetricKind::LineEmbedding);
    const FiniteInstance& fi = *m.finite();
    for (int trial = 0; trial < 500; ++trial) {
      const int x = static_cast<int>(rng() % 6), y = static_cast<int>(rng() % 6);
      const int u = static_cast<int>(rng() % 6), v = static_cast<int>(rng() % 6);
      CHECK(lipschitz_inequality_check(fi, x, y, u, v));
    }
  }
}

TEST_CASE("diam: singleton and small sets") {
  const MetricInstance chain = chain_instance();
  const FiniteInstance& m = *chain.finite();
  const std::vector<int> one{1};
  const std::vector<int> all{0, 1, 2};
  CHECK(diam(m, one) == 0.0);
  CHECK(diam(m, all) == 2.0);
  CHECK_THROWS_AS(diam(m, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("interval carrier: diameter and Lipschitz bound") {
  const MetricInstance banach = banach_instance();
  const IntervalInstance& iv = *banach.interval();
  const std::vector<double> pts{0.0, 0.5, 2.0};
  CHECK(diam(iv, pts) == 2.0);
  CHECK(lipschitz_inequality_check(iv, 0.0, 2.0, 1.0, 1.0));
}

TEST_CASE("functional values on the chain instance") {
  const MetricInstance chain = chain_instance();
  const FiniteInstance& m = *chain.finite();
  using F = Functional;
  CHECK(eval_functional(m, F::A1, 0, 2) == 2.0);
  CHECK(eval_functional(m, F::A2, 0, 2) == 1.0);
  CHECK(eval_functional(m, F::A3, 0, 2) == 1.0);
  CHECK(eval_functional(m, F::A4, 0, 2) == 1.0);
  CHECK(eval_functional(m, F::B1, 0, 2) == 2.0);
  for (F f : {F::B2, F::B3, F::B4, F::C1, F::C2})
    CHECK(eval_functional(m, f, 0, 2) == 2.0);
}

TEST_CASE("functionals collapse to the distance between fixed points") {
  const MetricInstance identity = relfix::testing::identity_instance();
  const FiniteInstance& m = *identity.finite();
  using F = Functional;
  for (F f : {F::A1, F::B2, F::B3, F::B4, F::C1, F::C2})
    CHECK(eval_functional(m, f, 0, 2) == m.d(0, 2));
  // A shared fixed point zeroes every functional.
  for (F f : {F::A1, F::A2, F::A3, F::A4, F::B1, F::B2, F::B3, F::B4, F::C1, F::C2})
    CHECK(eval_functional(m, f, 1, 1) == 0.0);
}

TEST_CASE("functional values on an interval carrier") {
  const MetricInstance banach = banach_instance();
  const IntervalInstance& iv = *banach.interval();
  using F = Functional;
  CHECK(eval_functional(iv, F::A1, 0.0, 2.0) == 2.0);
  CHECK(eval_functional(iv, F::A2, 0.0, 2.0) == 0.5);
  CHECK(eval_functional(iv, F::A3, 0.0, 2.0) == 1.0);
  CHECK(eval_functional(iv, F::A4, 0.0, 2.0) == 1.5);
  CHECK(eval_functional(iv, F::B1, 0.0, 2.0) == 2.0);
}

TEST_CASE("displacement functionals are ordered along the orbit") {
  // A4 <= A2 <= A3 at (x, Tx): the middle is a triangle average.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const MetricInstance m =
        random_instance(seed, 5, 0.5, MapKind::Arbitrary,
                        seed % 2 ? MetricKind::RandomTable : MetricKind::LineEmbedding);
    const FiniteInstance& fi = *m.finite();
    for (int x = 0; x < fi.size(); ++x) {
      const int tx = fi.apply(x);
      const double a4 = eval_functional(fi, Functional::A4, x, tx);
      const double a2 = eval_functional(fi, Functional::A2, x, tx);
      const double a3 = eval_functional(fi, Functional::A3, x, tx);
      CHECK(a4 <= a2 + 1e-12);
      CHECK(a2 <= a3 + 1e-12);
    }
  }
}

TEST_CASE("bounds: every contraction functional sits between A1 and B1") {
  const MetricInstance chain = chain_instance();
  const FiniteInstance& m = *chain.finite();
  using F = Functional;
  for (F f : {F::A1, F::B2, F::B3, F::B4, F::C1, F::C2}) CHECK(check_bounds(m, f));
}

TEST_CASE("bounds: property over random instances") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    const MetricInstance m =
        random_instance(seed, 6, 0.4, MapKind::Monotone,
                        seed % 2 ? MetricKind::RandomTable : MetricKind::LineEmbedding);
    using F = Functional;
    for (F f : {F::A1, F::B2, F::B3, F::B4, F::C1, F::C2})
      CHECK(check_bounds(*m.finite(), f));
  }
}

TEST_CASE("bounds: corrupted values are caught") {
  const MetricInstance chain = chain_instance();
  const FiniteInstance& m = *chain.finite();
  // Below the lower bound on some pair.
  CHECK_FALSE(check_bounds(m, [&m](int x, int y) {
    return eval_functional(m, Functional::A1, x, y) - 0.5;
  }));
  // Above the diameter ceiling.
  CHECK_FALSE(check_bounds(m, [&m](int x, int y) {
    return eval_functional(m, Functional::B1, x, y) + 1.0;
  }));
  // Zero on a related distinct pair.
  CHECK_FALSE(check_bounds(m, [](int, int) { return 0.0; }));
}

TEST_CASE("interval instance validates the map range") {
  IntervalRelation rel;
  rel.kind = IntervalRelation::Kind::Order;
  CHECK_THROWS_AS(IntervalInstance({0.0, 2.0}, {2.0, 0.0}, rel), std::invalid_argument);
  CHECK_THROWS_AS(IntervalInstance({2.0, 0.0}, {0.5, 1.0}, rel), std::invalid_argument);
}

TEST_CASE("finite instance structural guards") {
  Eigen::MatrixXd d(2, 2);
  d << 0, 1, 1, 0;
  CHECK_THROWS_AS(FiniteInstance(d, {0, 5}, FiniteRelation::full(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteInstance(d, {0, 1}, FiniteRelation(2, {})),
                  std::invalid_argument);
  // Fractional distances drop the exact flag.
  Eigen::MatrixXd frac(2, 2);
  frac << 0, 0.5, 0.5, 0;
  CHECK_FALSE(FiniteInstance(frac, {0, 1}, FiniteRelation::full(2)).exact);
  CHECK(FiniteInstance(d, {0, 1}, FiniteRelation::full(2)).exact);
}
