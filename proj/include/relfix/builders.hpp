#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "relfix/metric.hpp"
#include "relfix/relation.hpp"

namespace relfix {

/// Blocks A_1..A_p of a cyclic cover; the selfmap must send each block into
/// its successor (wrapping around). Blocks may overlap.
struct CyclicCover {
  std::vector<std::vector<int>> blocks;
};

/// Union of block products A_1 x A_2, ..., A_p x A_1 over an n-point carrier.
/// Rejects covers the selfmap does not respect, naming the offending block.
FiniteRelation cyclic_relation(const CyclicCover& cover, int n,
                               std::span<const int> selfmap);

/// Interval version: validates the cover against the affine map and returns
/// the relation tag.
IntervalRelation cyclic_cover_relation(std::span<const Interval> blocks,
                                       const AffineMap& map);

/// Pairs whose sigma weight reaches 1.
FiniteRelation sigma_relation(const Eigen::MatrixXd& sigma);

/// Pairs with alpha weight at most 1 and beta weight at least 1.
FiniteRelation alpha_beta_relation(const Eigen::MatrixXd& alpha,
                                   const Eigen::MatrixXd& beta);

enum class MapKind { Arbitrary, Monotone, ConstantBiased };
enum class MetricKind { LineEmbedding, RandomTable };

/// Deterministic per seed. Line embeddings place points at distinct integer
/// coordinates; random tables draw integer entries and repair the triangle
/// inequality by all-pairs shortest paths. The relation is sampled at the
/// given density and forced nonempty.
MetricInstance random_instance(std::uint64_t seed, int n, double density,
                               MapKind map_kind, MetricKind metric_kind);

}  // namespace relfix
