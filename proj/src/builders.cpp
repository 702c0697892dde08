#include "relfix/builders.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace relfix {

namespace {

// Engine-direct helpers keep instance generation reproducible independent of
// library distribution internals.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FiniteRelation cyclic_relation(const CyclicCover& cover, int n,
                               std::span<const int> selfmap) {
  const int p = static_cast<int>(cover.blocks.size());
  if (p < 2) throw std::invalid_argument("cyclic_relation: need at least 2 blocks");
  if (static_cast<int>(selfmap.size()) != n)
    throw std::invalid_argument("cyclic_relation: selfmap size mismatch");
  for (int i = 0; i < p; ++i) {
    if (cover.blocks[i].empty())
      throw std::invalid_argument("cyclic_relation: block " + std::to_string(i + 1) +
                                  " is empty");
    for (int v : cover.blocks[i])
      if (v < 0 || v >= n)
        throw std::invalid_argument("cyclic_relation: block " + std::to_string(i + 1) +
                                    " has a point out of range");
  }
  for (int i = 0; i < p; ++i) {
    const std::vector<int>& next = cover.blocks[(i + 1) % p];
    for (int v : cover.blocks[i])
      if (std::find(next.begin(), next.end(), selfmap[v]) == next.end())
        throw std::invalid_argument("cyclic_relation: map sends point " +
                                    std::to_string(v) + " of block " +
                                    std::to_string(i + 1) +
                                    " outside the successor block");
  }
  PairSet pairs;
  for (int i = 0; i < p; ++i)
    for (int a : cover.blocks[i])
      for (int b : cover.blocks[(i + 1) % p]) pairs.insert({a, b});
  return FiniteRelation(n, std::move(pairs));
}

IntervalRelation cyclic_cover_relation(std::span<const Interval> blocks,
                                       const AffineMap& map) {
  const int p = static_cast<int>(blocks.size());
  if (p < 2)
    throw std::invalid_argument("cyclic_cover_relation: need at least 2 blocks");
  for (int i = 0; i < p; ++i) {
    const Interval& blk = blocks[i];
    const Interval& nxt = blocks[(i + 1) % p];
    if (blk.lo > blk.hi)
      throw std::invalid_argument("cyclic_cover_relation: block " +
                                  std::to_string(i + 1) + " is empty");
    const double y1 = map(blk.lo), y2 = map(blk.hi);
    if (std::min(y1, y2) < nxt.lo - 1e-12 || std::max(y1, y2) > nxt.hi + 1e-12)
      throw std::invalid_argument("cyclic_cover_relation: block " +
                                  std::to_string(i + 1) +
                                  " does not map into its successor");
  }
  IntervalRelation rel;
  rel.kind = IntervalRelation::Kind::CyclicCover;
  rel.blocks.assign(blocks.begin(), blocks.end());
  return rel;
}

FiniteRelation sigma_relation(const Eigen::MatrixXd& sigma) {
  const int n = static_cast<int>(sigma.rows());
  if (n < 1 || sigma.cols() != n)
    throw std::invalid_argument("sigma_relation: table must be square");
  PairSet pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sigma(i, j) >= 1.0) pairs.insert({i, j});
  if (pairs.empty())
    throw std::invalid_argument("sigma_relation: no weight reaches 1, relation empty");
  return FiniteRelation(n, std::move(pairs));
}

FiniteRelation alpha_beta_relation(const Eigen::MatrixXd& alpha,
                                   const Eigen::MatrixXd& beta) {
  const int n = static_cast<int>(alpha.rows());
  if (n < 1 || alpha.cols() != n || beta.rows() != n || beta.cols() != n)
    throw std::invalid_argument("alpha_beta_relation: tables must be square and match");
  PairSet pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (alpha(i, j) <= 1.0 && beta(i, j) >= 1.0) pairs.insert({i, j});
  if (pairs.empty())
    throw std::invalid_argument("alpha_beta_relation: intersection empty");
  return FiniteRelation(n, std::move(pairs));
}

MetricInstance random_instance(std::uint64_t seed, int n, double density,
                               MapKind map_kind, MetricKind metric_kind) {
  if (n < 2) throw std::invalid_argument("random_instance: need n >= 2");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("random_instance: density must be in (0,1]");
  std::mt19937_64 rng(seed);

  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  if (metric_kind == MetricKind::LineEmbedding) {
    std::vector<int> coords(4 * n);
    for (int i = 0; i < 4 * n; ++i) coords[i] = i;
    for (int i = 4 * n - 1; i > 0; --i)
      std::swap(coords[i], coords[next_below(rng, static_cast<std::uint64_t>(i + 1))]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d(i, j) = std::abs(coords[i] - coords[j]);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double v = 1.0 + static_cast<double>(next_below(rng, 12));
        d(i, j) = v;
        d(j, i) = v;
      }
    // Shortest-path completion repairs the triangle inequality while keeping
    // entries integral and positive off the diagonal.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  }

  std::vector<int> map(n);
  switch (map_kind) {
    case MapKind::Arbitrary:
      for (int i = 0; i < n; ++i) map[i] = static_cast<int>(next_below(rng, n));
      break;
    case MapKind::Monotone:
      for (int i = 0; i < n; ++i) map[i] = static_cast<int>(next_below(rng, n));
      std::sort(map.begin(), map.end());
      break;
    case MapKind::ConstantBiased: {
      const int c = static_cast<int>(next_below(rng, n));
      for (int i = 0; i < n; ++i) {
        const bool stick = next_below(rng, 4) != 0;  // 3 in 4 to the constant
        map[i] = stick ? c : static_cast<int>(next_below(rng, n));
      }
      break;
    }
  }

  PairSet pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (next_unit(rng) < density) pairs.insert({i, j});
  if (pairs.empty()) {
    const int i = static_cast<int>(next_below(rng, n));
    const int j = static_cast<int>(next_below(rng, n));
    pairs.insert({i, j});
  }

  return MetricInstance(
      FiniteInstance(std::move(d), std::move(map), FiniteRelation(n, std::move(pairs))));
}

}  // namespace relfix
