#include "relfix/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "relfix/numeric.hpp"

namespace relfix::oracle {

namespace {

// Local functional evaluation, written out from the definitions.
double naive_functional(const FiniteInstance& m, Functional f, int x, int y) {
  const int tx = m.selfmap[x];
  const int ty = m.selfmap[y];
  const double dxy = m.dist(x, y);
  const double dxtx = m.dist(x, tx);
  const double dyty = m.dist(y, ty);
  const double dxty = m.dist(x, ty);
  const double dtxy = m.dist(tx, y);
  double out = 0.0;
  switch (f) {
    case Functional::A1:
      out = dxy;
      break;
    case Functional::A2:
      out = (dxtx + dyty) / 2.0;
      break;
    case Functional::A3:
      out = dxtx > dyty ? dxtx : dyty;
      break;
    case Functional::A4:
      out = (dxty + dtxy) / 2.0;
      break;
    case Functional::B1: {
      const int pts[4] = {x, tx, y, ty};
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (m.dist(pts[a], pts[b]) > out) out = m.dist(pts[a], pts[b]);
      break;
    }
    case Functional::B2: {
      const double a2 = (dxtx + dyty) / 2.0;
      out = dxy > a2 ? dxy : a2;
      break;
    }
    case Functional::B3: {
      const double a3 = dxtx > dyty ? dxtx : dyty;
      out = dxy > a3 ? dxy : a3;
      break;
    }
    case Functional::B4: {
      const double a4 = (dxty + dtxy) / 2.0;
      out = dxy > a4 ? dxy : a4;
      break;
    }
    case Functional::C1: {
      const double a2 = (dxtx + dyty) / 2.0;
      const double a4 = (dxty + dtxy) / 2.0;
      out = dxy;
      if (a2 > out) out = a2;
      if (a4 > out) out = a4;
      break;
    }
    case Functional::C2: {
      const double a3 = dxtx > dyty ? dxtx : dyty;
      const double a4 = (dxty + dtxy) / 2.0;
      out = dxy;
      if (a3 > out) out = a3;
      if (a4 > out) out = a4;
      break;
    }
  }
  return out;
}

// Pair-set composition without any matrix representation.
PairSet naive_compose(const PairSet& r, const PairSet& s) {
  PairSet out;
  for (const auto& [a, b] : r)
    for (const auto& [c, e] : s)
      if (b == c) out.insert({a, e});
  return out;
}

}  // namespace

std::set<int> brute_fixed_points(const FiniteInstance& m) {
  std::set<int> out;
  for (int i = 0; i < m.size(); ++i)
    if (m.selfmap[i] == i) out.insert(i);
  return out;
}

bool brute_k_transitive(const FiniteRelation& r, int k) {
  if (k < 2) throw std::invalid_argument("brute_k_transitive: k must be >= 2");
  PairSet acc;
  for (int i = 0; i < r.size(); ++i) acc.insert({i, i});
  for (int step = 0; step < k; ++step) acc = naive_compose(acc, r.pairs());
  for (const auto& pr : acc)
    if (r.pairs().count(pr) == 0) return false;
  return true;
}

Verdict brute_mk_verdict(const FiniteInstance& m, Functional g,
                         std::span<const double> eps_grid) {
  std::vector<std::pair<int, int>> related;
  for (const auto& [i, j] : m.rel.pairs())
    if (i != j) related.push_back({i, j});
  if (related.empty()) return Verdict::vacuous("no related distinct pairs");

  // Direct scan: every related distinct pair must contract strictly.
  for (const auto& [x, y] : related) {
    const double gv = naive_functional(m, g, x, y);
    const double dt = m.dist(m.selfmap[x], m.selfmap[y]);
    const bool strict = m.exact ? dt < gv : gv - dt > kTol;
    if (!strict) return Verdict::fail_pair(x, y, "no strict contraction at this pair");
  }

  // Margin sweep on a perturbed grid of levels: for each eps a descending
  // sweep over candidate margins must find one whose window holds.
  std::vector<double> levels;
  for (const auto& [x, y] : related) levels.push_back(naive_functional(m, g, x, y));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<double> grid(eps_grid.begin(), eps_grid.end());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    grid.push_back(levels[i]);
    grid.push_back(levels[i] - kTol);
    grid.push_back(levels[i] + kTol);
    if (i + 1 < levels.size()) grid.push_back((levels[i] + levels[i + 1]) / 2.0);
  }
  if (!levels.empty()) grid.push_back(levels.front() / 2.0);

  for (double eps : grid) {
    if (!(eps > 0.0)) continue;
    std::vector<double> margins;
    for (double lvl : levels)
      if (lvl > eps) margins.push_back(lvl - eps);
    margins.push_back(eps);  // margins that dodge every level entirely
    margins.push_back(kTol);
    std::sort(margins.rbegin(), margins.rend());
    bool found = false;
    for (double delta : margins) {
      if (!(delta > 0.0)) continue;
      bool window_ok = true;
      for (const auto& [x, y] : related) {
        const double gv = naive_functional(m, g, x, y);
        if (eps < gv && gv < eps + delta) {
          const double dt = m.dist(m.selfmap[x], m.selfmap[y]);
          if (!(dt <= eps)) {
            window_ok = false;
            break;
          }
        }
      }
      if (window_ok) {
        found = true;
        break;
      }
    }
    if (!found) {
      Verdict v = Verdict::fail("no margin works at this level");
      v.point_witness = eps;
      return v;
    }
  }
  return Verdict::pass();
}

bool brute_picard_conclusion(const FiniteInstance& m) {
  const int n = m.size();
  for (int x = 0; x < n; ++x) {
    if (m.rel.pairs().count({x, m.selfmap[x]}) == 0) continue;
    std::vector<bool> seen(n, false);
    int cur = x;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = m.selfmap[cur];
    }
    if (m.selfmap[cur] != cur) return false;  // orbit fell into a cycle
  }
  for (int z1 = 0; z1 < n; ++z1)
    for (int z2 = 0; z2 < n; ++z2)
      if (z1 != z2 && m.selfmap[z1] == z1 && m.selfmap[z2] == z2 &&
          m.rel.pairs().count({z1, z2}) > 0)
        return false;
  return true;
}

}  // namespace relfix::oracle
