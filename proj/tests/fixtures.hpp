#pragma once

#include <random>
#include <vector>

#include "relfix/metric.hpp"
#include "relfix/relation.hpp"

namespace relfix::testing {

// Three points on a line, everything mapped to the middle, usual order.
inline MetricInstance chain_instance() {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 2, 1, 0, 1, 2, 1, 0;
  return MetricInstance(FiniteInstance(d, {1, 1, 1}, FiniteRelation::less_equal(3)));
}

// Two points swapped by the map, related both ways.
inline MetricInstance swap_instance() {
  Eigen::MatrixXd d(2, 2);
  d << 0, 1, 1, 0;
  return MetricInstance(
      FiniteInstance(d, {1, 0}, FiniteRelation(2, PairSet{{0, 1}, {1, 0}})));
}

// Identity map on the 3-point line with the usual order.
inline MetricInstance identity_instance() {
  Eigen::MatrixXd d(3, 3);
  d << 0, 1, 2, 1, 0, 1, 2, 1, 0;
  return MetricInstance(FiniteInstance(d, {0, 1, 2}, FiniteRelation::less_equal(3)));
}

// Halving map toward 2 on [0, 2] with the order relation.
inline MetricInstance banach_instance() {
  IntervalRelation rel;
  rel.kind = IntervalRelation::Kind::Order;
  return MetricInstance(IntervalInstance({0.0, 2.0}, {0.5, 1.0}, rel));
}

inline FiniteRelation random_relation(std::mt19937_64& rng, int n, double density,
                                      bool force_nonempty = true) {
  PairSet pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < density) pairs.insert({i, j});
    }
  if (force_nonempty && pairs.empty())
    pairs.insert({static_cast<int>(rng() % n), static_cast<int>(rng() % n)});
  return FiniteRelation(n, std::move(pairs));
}

inline std::vector<int> random_selfmap(std::mt19937_64& rng, int n) {
  std::vector<int> map(n);
  for (int& v : map) v = static_cast<int>(rng() % n);
  return map;
}

}  // namespace relfix::testing
