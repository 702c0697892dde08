#include "doctest.h"
#include "fixtures.hpp"
#include "relfix/builders.hpp"
#include "relfix/certify.hpp"
#include "relfix/scenario.hpp"

using namespace relfix;

TEST_CASE("cyclic relation: singleton blocks give the swap pairs") {
  CyclicCover cover{{{0}, {1}}};
  const std::vector<int> swap{1, 0};
  CHECK(cyclic_relation(cover, 2, swap) == FiniteRelation(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("cyclic relation: overlapping blocks expand to both products") {
  CyclicCover cover{{{0, 1}, {1, 2}}};
  const std::vector<int> map{2, 1, 0};  // sends {0,1} into {1,2} and back
  const FiniteRelation rel = cyclic_relation(cover, 3, map);
  PairSet expect;
  for (int a : {0, 1})
    for (int b : {1, 2}) {
      expect.insert({a, b});
      expect.insert({b, a});
    }
  CHECK(rel == FiniteRelation(3, expect));
}

TEST_CASE("cyclic relation: block violations are named") {
  CyclicCover cover{{{0}, {1}}};
  const std::vector<int> stay{0, 1};  // block 1 does not reach block 2
  CHECK_THROWS_WITH_AS(cyclic_relation(cover, 2, stay),
                       doctest::Contains("block 1"), std::invalid_argument);
}

TEST_CASE("cyclic interval cover: alternating halves recur with the block count") {
  const std::vector<Interval> blocks{{-1.0, 0.0}, {0.0, 1.0}};
  const AffineMap map{-0.5, 0.0};
  const IntervalRelation rel = cyclic_cover_relation(blocks, map);
  const MetricInstance m(IntervalInstance({-1.0, 1.0}, map, rel));
  const Verdict v = check_finitely_semi_recurrent(m, 16);
  CHECK(v.kind == VerdictKind::Bounded);
}

TEST_CASE("cyclic finite cover: recurrence check stays vacuous") {
  CyclicCover cover{{{0}, {1}}};
  const std::vector<int> swap{1, 0};
  Eigen::MatrixXd d(2, 2);
  d << 0, 1, 1, 0;
  const MetricInstance m(
      FiniteInstance(d, swap, cyclic_relation(cover, 2, swap)));
  CHECK(check_finitely_semi_recurrent(m, 16).kind == VerdictKind::Vacuous);
}

TEST_CASE("cyclic interval cover: map escaping a block is rejected") {
  const std::vector<Interval> blocks{{0.0, 1.0}, {1.0, 2.0}};
  const AffineMap map{0.5, 1.0};  // sends [1,2] to [1.5,2], outside [0,1]
  CHECK_THROWS_WITH_AS(cyclic_cover_relation(blocks, map),
                       doctest::Contains("block 2"), std::invalid_argument);
}

TEST_CASE("sigma relation: thresholds at one") {
  Eigen::MatrixXd all = Eigen::MatrixXd::Constant(2, 2, 1.0);
  CHECK(sigma_relation(all) == FiniteRelation::full(2));
  Eigen::MatrixXd none = Eigen::MatrixXd::Zero(2, 2);
  CHECK_THROWS_AS(sigma_relation(none), std::invalid_argument);
  Eigen::MatrixXd one = Eigen::MatrixXd::Constant(2, 2, 0.2);
  one(0, 1) = 1.5;
  CHECK(sigma_relation(one) == FiniteRelation(2, {{0, 1}}));
}

TEST_CASE("alpha-beta relation: meet of the two thresholds") {
  Eigen::MatrixXd ones = Eigen::MatrixXd::Constant(2, 2, 1.0);
  CHECK(alpha_beta_relation(ones, ones) == FiniteRelation::full(2));
  Eigen::MatrixXd alpha = Eigen::MatrixXd::Constant(2, 2, 2.0);
  Eigen::MatrixXd beta = Eigen::MatrixXd::Constant(2, 2, 1.0);
  alpha(0, 1) = 0.5;
  beta(0, 1) = 2.0;
  CHECK(alpha_beta_relation(alpha, beta) == FiniteRelation(2, {{0, 1}}));
  Eigen::MatrixXd blocked = Eigen::MatrixXd::Constant(2, 2, 2.0);
  CHECK_THROWS_AS(alpha_beta_relation(blocked, beta), std::invalid_argument);
}

TEST_CASE("random instances: reproducible per seed") {
  for (std::uint64_t seed : {1ull, 7ull, 42ull, 9999ull}) {
    const MetricInstance a =
        random_instance(seed, 6, 0.3, MapKind::Arbitrary, MetricKind::RandomTable);
    const MetricInstance b =
        random_instance(seed, 6, 0.3, MapKind::Arbitrary, MetricKind::RandomTable);
    CHECK(a == b);
    CHECK(render_scenario(a, {}) == render_scenario(b, {}));
  }
}

TEST_CASE("random instances: always valid metrics") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const MetricInstance m = random_instance(
        seed, 2 + static_cast<int>(seed % 7), 0.3, static_cast<MapKind>(seed % 3),
        seed % 2 ? MetricKind::RandomTable : MetricKind::LineEmbedding);
    CHECK(verify_metric_axioms(m).empty());
    CHECK(m.finite()->exact);
    CHECK_FALSE(m.finite()->rel.empty());
  }
}

TEST_CASE("random instances: full density gives the full relation") {
  const MetricInstance m =
      random_instance(5, 5, 1.0, MapKind::Monotone, MetricKind::LineEmbedding);
  CHECK(m.finite()->rel == FiniteRelation::full(5));
}

TEST_CASE("random instances: argument guards") {
  CHECK_THROWS_AS(random_instance(1, 1, 0.5, MapKind::Arbitrary,
                                  MetricKind::LineEmbedding),
                  std::invalid_argument);
  CHECK_THROWS_AS(random_instance(1, 4, 0.0, MapKind::Arbitrary,
                                  MetricKind::LineEmbedding),
                  std::invalid_argument);
}
