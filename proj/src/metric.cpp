#include "relfix/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relfix/numeric.hpp"

namespace relfix {

bool is_contraction_functional(Functional f) {
  switch (f) {
    case Functional::A1:
    case Functional::B2:
    case Functional::B3:
    case Functional::B4:
    case Functional::C1:
    case Functional::C2:
      return true;
    default:
      return false;
  }
}

bool in_class_g1(Functional f) {
  return f == Functional::A1 || f == Functional::B2 || f == Functional::B4 ||
         f == Functional::C1;
}

bool in_class_g2(Functional f) { return f == Functional::B3 || f == Functional::C2; }

const char* to_string(Functional f) {
  switch (f) {
    case Functional::A1: return "A1";
    case Functional::A2: return "A2";
    case Functional::A3: return "A3";
    case Functional::A4: return "A4";
    case Functional::B1: return "B1";
    case Functional::B2: return "B2";
    case Functional::B3: return "B3";
    case Functional::B4: return "B4";
    case Functional::C1: return "C1";
    case Functional::C2: return "C2";
  }
  return "?";
}

std::optional<Functional> parse_functional(std::string_view s) {
  using F = Functional;
  if (s == "A1") return F::A1;
  if (s == "A2") return F::A2;
  if (s == "A3") return F::A3;
  if (s == "A4") return F::A4;
  if (s == "B1") return F::B1;
  if (s == "B2") return F::B2;
  if (s == "B3") return F::B3;
  if (s == "B4") return F::B4;
  if (s == "C1") return F::C1;
  if (s == "C2") return F::C2;
  return std::nullopt;
}

FiniteInstance::FiniteInstance(Eigen::MatrixXd d, std::vector<int> map, FiniteRelation r)
    : dist(std::move(d)), selfmap(std::move(map)), rel(std::move(r)) {
  const int n = static_cast<int>(dist.rows());
  if (n < 1 || dist.cols() != n)
    throw std::invalid_argument("finite instance: distance table must be square");
  if (static_cast<int>(selfmap.size()) != n)
    throw std::invalid_argument("finite instance: selfmap size mismatch");
  for (int v : selfmap)
    if (v < 0 || v >= n)
      throw std::invalid_argument("finite instance: selfmap leaves the carrier");
  if (rel.size() != n)
    throw std::invalid_argument("finite instance: relation size mismatch");
  if (rel.empty())
    throw std::invalid_argument("finite instance: relation must be nonempty");
  exact = true;
  for (int i = 0; i < n && exact; ++i)
    for (int j = 0; j < n; ++j)
      if (!exact_integer(dist(i, j))) {
        exact = false;
        break;
      }
}

bool IntervalRelation::contains(double x, double y) const {
  switch (kind) {
    case Kind::Trivial:
      return true;
    case Kind::Order:
      return x <= y;
    case Kind::CyclicCover: {
      const int p = static_cast<int>(blocks.size());
      for (int i = 0; i < p; ++i)
        if (blocks[i].contains(x) && blocks[(i + 1) % p].contains(y)) return true;
      return false;
    }
    case Kind::AlphaBetaThreshold: {
      const double s = x >= y ? x - y : y - x;
      return alpha0 + alpha1 * s <= 1.0 && beta0 + beta1 * s >= 1.0;
    }
  }
  return false;
}

IntervalInstance::IntervalInstance(Interval dom, AffineMap map, IntervalRelation r)
    : domain(dom), selfmap(map), rel(std::move(r)) {
  if (!(domain.lo < domain.hi))
    throw std::invalid_argument("interval instance: need lo < hi");
  const double at_lo = selfmap(domain.lo);
  const double at_hi = selfmap(domain.hi);
  const double img_lo = std::min(at_lo, at_hi);
  const double img_hi = std::max(at_lo, at_hi);
  if (img_lo < domain.lo - 1e-12 || img_hi > domain.hi + 1e-12)
    throw std::invalid_argument("interval instance: map leaves the interval");
  if (rel.kind == IntervalRelation::Kind::CyclicCover) {
    if (rel.blocks.size() < 2)
      throw std::invalid_argument("interval instance: cyclic cover needs >= 2 blocks");
    for (const Interval& b : rel.blocks)
      if (b.lo > b.hi || b.lo < domain.lo - 1e-12 || b.hi > domain.hi + 1e-12)
        throw std::invalid_argument("interval instance: cover block outside domain");
  }
}

namespace {

struct FunctionalTerms {
  double dxy, dx_tx, dy_ty, dx_ty, dtx_y, dtx_ty;
};

double eval_terms(Functional f, const FunctionalTerms& t) {
  switch (f) {
    case Functional::A1:
      return t.dxy;
    case Functional::A2:
      return 0.5 * (t.dx_tx + t.dy_ty);
    case Functional::A3:
      return std::max(t.dx_tx, t.dy_ty);
    case Functional::A4:
      return 0.5 * (t.dx_ty + t.dtx_y);
    case Functional::B1:
      return std::max({t.dxy, t.dx_tx, t.dy_ty, t.dx_ty, t.dtx_y, t.dtx_ty});
    case Functional::B2:
      return std::max(t.dxy, 0.5 * (t.dx_tx + t.dy_ty));
    case Functional::B3:
      return std::max(t.dxy, std::max(t.dx_tx, t.dy_ty));
    case Functional::B4:
      return std::max(t.dxy, 0.5 * (t.dx_ty + t.dtx_y));
    case Functional::C1:
      return std::max({t.dxy, 0.5 * (t.dx_tx + t.dy_ty), 0.5 * (t.dx_ty + t.dtx_y)});
    case Functional::C2:
      return std::max(
          {t.dxy, std::max(t.dx_tx, t.dy_ty), 0.5 * (t.dx_ty + t.dtx_y)});
  }
  return 0.0;
}

}  // namespace

std::vector<AxiomViolation> verify_metric_axioms(const MetricInstance& m) {
  std::vector<AxiomViolation> out;
  const FiniteInstance* fi = m.finite();
  if (!fi) return out;  // absolute difference on an interval is a metric
  const int n = fi->size();
  for (int i = 0; i < n; ++i) {
    if (fi->d(i, i) != 0.0)
      out.push_back({AxiomViolation::Kind::Diagonal, i, i, -1,
                     "d(" + std::to_string(i) + "," + std::to_string(i) + ") = " +
                         fmt_double(fi->d(i, i)) + " != 0"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (fi->d(i, j) <= 0.0)
        out.push_back({AxiomViolation::Kind::Sufficiency, i, j, -1,
                       "d(" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + fmt_double(fi->d(i, j)) +
                           " not positive for distinct points"});
      if (fi->d(i, j) != fi->d(j, i))
        out.push_back({AxiomViolation::Kind::Symmetry, i, j, -1,
                       "d(" + std::to_string(i) + "," + std::to_string(j) +
                           ") != d(" + std::to_string(j) + "," + std::to_string(i) +
                           ")"});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!leq_with_slack(fi->d(i, k), fi->d(i, j) + fi->d(j, k), fi->exact))
          out.push_back({AxiomViolation::Kind::Triangle, i, j, k,
                         "d(" + std::to_string(i) + "," + std::to_string(k) + ") = " +
                             fmt_double(fi->d(i, k)) + " exceeds d(" +
                             std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                             std::to_string(j) + "," + std::to_string(k) + ") = " +
                             fmt_double(fi->d(i, j) + fi->d(j, k))});
      }
  return out;
}

bool lipschitz_inequality_check(const FiniteInstance& m, int x, int y, int u, int v) {
  const int n = m.size();
  if (x < 0 || y < 0 || u < 0 || v < 0 || x >= n || y >= n || u >= n || v >= n)
    throw std::invalid_argument("lipschitz_inequality_check: point out of range");
  return leq_with_slack(std::abs(m.d(x, y) - m.d(u, v)), m.d(x, u) + m.d(y, v),
                        m.exact);
}

bool lipschitz_inequality_check(const IntervalInstance& m, double x, double y, double u,
                                double v) {
  for (double p : {x, y, u, v})
    if (!m.domain.contains(p))
      throw std::invalid_argument("lipschitz_inequality_check: point out of range");
  return std::abs(m.d(x, y) - m.d(u, v)) <= m.d(x, u) + m.d(y, v) + kTol;
}

double diam(const FiniteInstance& m, std::span<const int> pts) {
  if (pts.empty()) throw std::invalid_argument("diam: empty point set");
  double best = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      best = std::max(best, m.d(pts[a], pts[b]));
  return best;
}

double diam(const IntervalInstance& m, std::span<const double> pts) {
  if (pts.empty()) throw std::invalid_argument("diam: empty point set");
  double best = 0.0;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      best = std::max(best, m.d(pts[a], pts[b]));
  return best;
}

double eval_functional(const FiniteInstance& m, Functional f, int x, int y) {
  const int n = m.size();
  if (x < 0 || y < 0 || x >= n || y >= n)
    throw std::invalid_argument("eval_functional: point out of range");
  const int tx = m.apply(x);
  const int ty = m.apply(y);
  FunctionalTerms t{m.d(x, y),  m.d(x, tx), m.d(y, ty),
                    m.d(x, ty), m.d(tx, y), m.d(tx, ty)};
  return eval_terms(f, t);
}

double eval_functional(const IntervalInstance& m, Functional f, double x, double y) {
  if (!m.domain.contains(x) || !m.domain.contains(y))
    throw std::invalid_argument("eval_functional: point outside the interval");
  const double tx = m.apply(x);
  const double ty = m.apply(y);
  FunctionalTerms t{m.d(x, y),  m.d(x, tx), m.d(y, ty),
                    m.d(x, ty), m.d(tx, y), m.d(tx, ty)};
  return eval_terms(f, t);
}

bool check_bounds(const FiniteInstance& m, Functional g) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("check_bounds: not a contraction functional");
  return check_bounds(m, [&m, g](int x, int y) { return eval_functional(m, g, x, y); });
}

bool check_bounds(const FiniteInstance& m,
                  const std::function<double(int, int)>& g_values) {
  const int n = m.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const double lower = eval_functional(m, Functional::A1, x, y);
      const double upper = eval_functional(m, Functional::B1, x, y);
      const double gv = g_values(x, y);
      if (!leq_with_slack(lower, gv, m.exact)) return false;
      if (!leq_with_slack(gv, upper, m.exact)) return false;
    }
  const FiniteRelation related = m.rel.nonidentical_part();
  for (const auto& [x, y] : related.pairs()) {
    const double gv = g_values(x, y);
    if (!(m.exact ? gv > 0.0 : gv > kTol)) return false;
  }
  return true;
}

}  // namespace relfix
