#pragma once

#include <Eigen/Core>

#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relfix {

// Thrown when a checked precondition on inputs does not hold (distinct from
// a malformed argument).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

using IndexPair = std::pair<int, int>;
using PairSet = std::set<IndexPair>;

/// Binary relation over {0, ..., size-1}, stored as an explicit pair set.
/// Composition materializes a dense 0/1 adjacency view; sizes stay at desk
/// scale, so the O(n^3) matrix product matches the brute-force oracle cost.
class FiniteRelation {
 public:
  FiniteRelation(int size, PairSet pairs);

  static FiniteRelation identity(int size);
  static FiniteRelation full(int size);
  static FiniteRelation less_equal(int size);  // i <= j
  static FiniteRelation from_adjacency(const Eigen::MatrixXi& adj);

  int size() const { return size_; }
  const PairSet& pairs() const { return pairs_; }
  bool contains(int i, int j) const { return pairs_.count({i, j}) > 0; }
  bool empty() const { return pairs_.empty(); }
  bool subset_of(const FiniteRelation& other) const;

  /// Pairs (i, j) with i != j.
  FiniteRelation nonidentical_part() const;

  Eigen::MatrixXi adjacency() const;

  friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
    return a.size_ == b.size_ && a.pairs_ == b.pairs_;
  }

 private:
  int size_ = 0;
  PairSet pairs_;
};

FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s);

/// k-fold composition; k = 0 yields the identity relation.
FiniteRelation power(const FiniteRelation& r, int k);

/// Both exponent identities: r^(m+n) = r^m o r^n and (r^m)^n = r^(m*n).
bool check_power_laws(const FiniteRelation& r, int m, int n);

bool is_k_transitive(const FiniteRelation& r, int k);

/// Sub-relation on the given points, re-indexed by ascending original index.
FiniteRelation restrict_to(const FiniteRelation& r, const std::vector<int>& keep);

/// Consecutive terms related: (seq[i], seq[i+1]) in r for all i.
bool is_ascending(std::span<const int> seq, const FiniteRelation& r);

/// Forward-jump property of an ascending sequence under a relation whose
/// restriction to the sequence values is k-transitive: (z_i, z_{i+1+r(k-1)})
/// stays related for every jump count r <= r_max with the target in range.
/// Preconditions (ascending sequence, k-transitive restriction) are checked
/// and raise PreconditionViolation.
bool ascending_chain_property(std::span<const int> seq, const FiniteRelation& r,
                              int k, int r_max);

/// Iteration indices i in 1..horizon with (x, T^i x) related.
std::set<int> spectrum(int x, std::span<const int> selfmap, const FiniteRelation& r,
                       int horizon);

/// Every n in 1..horizon is covered by some spectrum element q with
/// q <= n < q+k. A true verdict is bounded: verified up to horizon only.
bool is_k_semi_recurrent_at(int x, std::span<const int> selfmap,
                            const FiniteRelation& r, int k, int horizon);

}  // namespace relfix
