#include "relfix/relation.hpp"

#include <algorithm>
#include <string>

namespace relfix {

FiniteRelation::FiniteRelation(int size, PairSet pairs)
    : size_(size), pairs_(std::move(pairs)) {
  if (size <= 0) throw std::invalid_argument("relation size must be positive");
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || j < 0 || i >= size || j >= size)
      throw std::invalid_argument("relation pair out of range: (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
  }
}

FiniteRelation FiniteRelation::identity(int size) {
  PairSet p;
  for (int i = 0; i < size; ++i) p.insert({i, i});
  return FiniteRelation(size, std::move(p));
}

FiniteRelation FiniteRelation::full(int size) {
  PairSet p;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) p.insert({i, j});
  return FiniteRelation(size, std::move(p));
}

FiniteRelation FiniteRelation::less_equal(int size) {
  PairSet p;
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) p.insert({i, j});
  return FiniteRelation(size, std::move(p));
}

FiniteRelation FiniteRelation::from_adjacency(const Eigen::MatrixXi& adj) {
  if (adj.rows() != adj.cols()) throw std::invalid_argument("adjacency must be square");
  PairSet p;
  for (int i = 0; i < adj.rows(); ++i)
    for (int j = 0; j < adj.cols(); ++j)
      if (adj(i, j) != 0) p.insert({i, j});
  return FiniteRelation(static_cast<int>(adj.rows()), std::move(p));
}

bool FiniteRelation::subset_of(const FiniteRelation& other) const {
  if (size_ != other.size_) return false;
  return std::includes(other.pairs_.begin(), other.pairs_.end(), pairs_.begin(),
                       pairs_.end());
}

FiniteRelation FiniteRelation::nonidentical_part() const {
  PairSet p;
  for (const auto& pr : pairs_)
    if (pr.first != pr.second) p.insert(pr);
  return FiniteRelation(size_, std::move(p));
}

Eigen::MatrixXi FiniteRelation::adjacency() const {
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(size_, size_);
  for (const auto& [i, j] : pairs_) adj(i, j) = 1;
  return adj;
}

FiniteRelation compose(const FiniteRelation& r, const FiniteRelation& s) {
  if (r.size() != s.size())
    throw std::invalid_argument("compose: relation sizes differ");
  Eigen::MatrixXi prod = r.adjacency() * s.adjacency();
  return FiniteRelation::from_adjacency(
      prod.unaryExpr([](int v) { return v > 0 ? 1 : 0; }));
}

FiniteRelation power(const FiniteRelation& r, int k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be nonnegative");
  FiniteRelation acc = FiniteRelation::identity(r.size());
  for (int i = 0; i < k; ++i) acc = compose(acc, r);
  return acc;
}

bool check_power_laws(const FiniteRelation& r, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("check_power_laws: negative exponent");
  const bool sum_law = power(r, m + n) == compose(power(r, m), power(r, n));
  const bool prod_law = power(power(r, m), n) == power(r, m * n);
  return sum_law && prod_law;
}

bool is_k_transitive(const FiniteRelation& r, int k) {
  if (k < 2) throw std::invalid_argument("is_k_transitive: k must be at least 2");
  return power(r, k).subset_of(r);
}

FiniteRelation restrict_to(const FiniteRelation& r, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("restrict_to: empty point set");
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> new_index(r.size(), -1);
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    if (sorted[pos] < 0 || sorted[pos] >= r.size())
      throw std::invalid_argument("restrict_to: point out of range");
    new_index[sorted[pos]] = static_cast<int>(pos);
  }
  PairSet p;
  for (const auto& [i, j] : r.pairs())
    if (new_index[i] >= 0 && new_index[j] >= 0) p.insert({new_index[i], new_index[j]});
  return FiniteRelation(static_cast<int>(sorted.size()), std::move(p));
}

bool is_ascending(std::span<const int> seq, const FiniteRelation& r) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!r.contains(seq[i], seq[i + 1])) return false;
  return true;
}

bool ascending_chain_property(std::span<const int> seq, const FiniteRelation& r,
                              int k, int r_max) {
  if (k < 2) throw std::invalid_argument("ascending_chain_property: k must be >= 2");
  if (r_max < 0) throw std::invalid_argument("ascending_chain_property: negative r_max");
  if (seq.empty()) throw std::invalid_argument("ascending_chain_property: empty sequence");
  if (!is_ascending(seq, r))
    throw PreconditionViolation("ascending_chain_property: sequence is not ascending");
  std::vector<int> values(seq.begin(), seq.end());
  if (!is_k_transitive(restrict_to(r, values), k))
    throw PreconditionViolation(
        "ascending_chain_property: restriction to the sequence is not k-transitive");

  const int len = static_cast<int>(seq.size());
  for (int i = 0; i < len; ++i) {
    for (int jump = 0; jump <= r_max; ++jump) {
      const int target = i + 1 + jump * (k - 1);
      if (target >= len) break;
      if (!r.contains(seq[i], seq[target])) return false;
    }
  }
  return true;
}

std::set<int> spectrum(int x, std::span<const int> selfmap, const FiniteRelation& r,
                       int horizon) {
  if (horizon < 1) throw std::invalid_argument("spectrum: horizon must be >= 1");
  if (x < 0 || x >= r.size()) throw std::invalid_argument("spectrum: point out of range");
  if (static_cast<int>(selfmap.size()) != r.size())
    throw std::invalid_argument("spectrum: selfmap size mismatch");
  std::set<int> out;
  int y = x;
  for (int i = 1; i <= horizon; ++i) {
    y = selfmap[y];
    if (r.contains(x, y)) out.insert(i);
  }
  return out;
}

bool is_k_semi_recurrent_at(int x, std::span<const int> selfmap,
                            const FiniteRelation& r, int k, int horizon) {
  if (k < 1) throw std::invalid_argument("is_k_semi_recurrent_at: k must be >= 1");
  if (horizon < k)
    throw std::invalid_argument("is_k_semi_recurrent_at: horizon must be >= k");
  const std::set<int> spec = spectrum(x, selfmap, r, horizon);
  for (int n = 1; n <= horizon; ++n) {
    bool covered = false;
    for (int q : spec) {
      if (q > n) break;
      if (n < q + k) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace relfix
