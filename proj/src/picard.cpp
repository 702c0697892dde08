#include "relfix/picard.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relfix/numeric.hpp"

namespace relfix {

namespace {

void fill_diagnostics(OrbitTrace& t, double stop_tol) {
  // Strict descent while displacements are positive; equality is tolerated
  // only once both values sit below the stop tolerance.
  t.strict_descent = true;
  for (std::size_t i = 0; i + 1 < t.rho.size(); ++i) {
    if (t.rho[i] <= 0.0) continue;
    if (t.rho[i + 1] < t.rho[i]) continue;
    if (t.rho[i] <= stop_tol && t.rho[i + 1] <= stop_tol) continue;
    t.strict_descent = false;
    break;
  }

  // Injectivity up to the stabilization index.
  std::size_t prefix_end = t.points.size();
  if (t.outcome.kind == OrbitOutcome::Kind::FixedPoint)
    prefix_end = static_cast<std::size_t>(t.outcome.steps) + 1;
  else if (t.outcome.kind == OrbitOutcome::Kind::Cycle)
    prefix_end = static_cast<std::size_t>(t.outcome.entry + t.outcome.period);
  t.injective_prefix = true;
  for (std::size_t i = 0; i < prefix_end && t.injective_prefix; ++i)
    for (std::size_t j = i + 1; j < prefix_end; ++j)
      if (t.points[i] == t.points[j]) {
        t.injective_prefix = false;
        break;
      }

  // Displacement trend: never rising (beyond the tolerance plateau) and
  // ending strictly below the start, or already at zero.
  if (t.rho.empty()) {
    t.semi_cauchy = true;
  } else {
    bool nonincreasing = true;
    for (std::size_t i = 0; i + 1 < t.rho.size(); ++i)
      if (t.rho[i + 1] > t.rho[i] && !(t.rho[i] <= stop_tol && t.rho[i + 1] <= stop_tol)) {
        nonincreasing = false;
        break;
      }
    const double last = t.rho.back();
    t.semi_cauchy = nonincreasing && (last <= stop_tol || last < t.rho.front());
  }
}

}  // namespace

int default_budget(const MetricInstance& m) {
  if (const FiniteInstance* fi = m.finite()) return fi->size() * fi->size() + 1;
  return 10000;
}

OrbitTrace iterate(const MetricInstance& m, double x0, int budget, double stop_tol) {
  if (budget < 1) throw std::invalid_argument("iterate: budget must be positive");
  OrbitTrace t;
  t.start = x0;

  if (const FiniteInstance* fi = m.finite()) {
    t.finite = true;
    if (x0 != std::floor(x0) || x0 < 0.0 || x0 >= static_cast<double>(fi->size()))
      throw std::invalid_argument("iterate: start point outside the carrier");
    int cur = static_cast<int>(x0);
    std::vector<int> seen_at(fi->size(), -1);
    seen_at[cur] = 0;
    t.points.push_back(cur);
    for (int n = 0; n < budget; ++n) {
      const int next = fi->apply(cur);
      t.points.push_back(next);
      t.rho.push_back(fi->d(cur, next));
      if (next == cur) {
        t.outcome.kind = OrbitOutcome::Kind::FixedPoint;
        t.outcome.value = cur;
        t.outcome.steps = n;
        t.outcome.residual = 0.0;
        break;
      }
      if (seen_at[next] >= 0) {
        t.outcome.kind = OrbitOutcome::Kind::Cycle;
        t.outcome.entry = seen_at[next];
        t.outcome.period = n + 1 - seen_at[next];
        break;
      }
      seen_at[next] = n + 1;
      cur = next;
      if (n == budget - 1) {
        t.outcome.kind = OrbitOutcome::Kind::BudgetExhausted;
        t.outcome.residual = t.rho.back();
      }
    }
    fill_diagnostics(t, 0.0);
    return t;
  }

  const IntervalInstance& iv = *m.interval();
  t.finite = false;
  if (!iv.domain.contains(x0))
    throw std::invalid_argument("iterate: start point outside the carrier");
  if (stop_tol < 0.0) throw std::invalid_argument("iterate: negative stop tolerance");
  double cur = x0;
  t.points.push_back(cur);
  for (int n = 0; n < budget; ++n) {
    const double next = iv.apply(cur);
    t.points.push_back(next);
    t.rho.push_back(iv.d(cur, next));
    if (t.rho.back() <= stop_tol) {
      t.outcome.kind = OrbitOutcome::Kind::FixedPoint;
      t.outcome.value = next;
      t.outcome.steps = n + 1;
      t.outcome.residual = iv.d(next, iv.apply(next));
      break;
    }
    cur = next;
    if (n == budget - 1) {
      t.outcome.kind = OrbitOutcome::Kind::BudgetExhausted;
      t.outcome.residual = t.rho.back();
    }
  }
  fill_diagnostics(t, stop_tol);
  return t;
}

std::string OrbitTrace::render() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << i << " ";
    if (finite)
      os << static_cast<long long>(points[i]);
    else
      os << fmt_double(points[i]);
    if (i < rho.size()) os << " " << fmt_double(rho[i]);
    os << "\n";
  }
  switch (outcome.kind) {
    case OrbitOutcome::Kind::FixedPoint:
      os << "outcome fixed-point z=";
      if (finite)
        os << static_cast<long long>(outcome.value);
      else
        os << fmt_double(outcome.value);
      os << " steps=" << outcome.steps << " residual=" << fmt_double(outcome.residual)
         << "\n";
      break;
    case OrbitOutcome::Kind::Cycle:
      os << "outcome cycle period=" << outcome.period << " entry=" << outcome.entry
         << "\n";
      break;
    case OrbitOutcome::Kind::BudgetExhausted:
      os << "outcome budget-exhausted residual=" << fmt_double(outcome.residual) << "\n";
      break;
  }
  return os.str();
}

CheckOutcome cauchy_estimate_check(const OrbitTrace& trace, const MetricInstance& m,
                                   double eps, double delta, int k) {
  if (!(eps > 0.0) || !(delta > 0.0) || k < 1)
    throw std::invalid_argument("cauchy_estimate_check: need eps, delta > 0 and k >= 1");
  const double quiet = delta / (4.0 * static_cast<double>(k));
  // First index from which every later displacement stays quiet.
  int n_delta = -1;
  for (int n = static_cast<int>(trace.rho.size()); n-- > 0;) {
    if (trace.rho[n] >= quiet) {
      n_delta = n + 1;
      break;
    }
  }
  if (n_delta < 0) n_delta = 0;
  if (n_delta >= static_cast<int>(trace.rho.size())) return CheckOutcome::NotApplicable;

  auto dist = [&](double a, double b) {
    if (const FiniteInstance* fi = m.finite())
      return fi->d(static_cast<int>(a), static_cast<int>(b));
    return m.interval()->d(a, b);
  };
  const double bound = eps + delta / 2.0;
  const int len = static_cast<int>(trace.points.size());
  for (int n = n_delta; n < len; ++n)
    for (int s = 1; n + s < len; ++s)
      if (!(dist(trace.points[n], trace.points[n + s]) < bound))
        return CheckOutcome::Violated;
  return CheckOutcome::Holds;
}

GspResult verify_gsp(const MetricInstance& m, Functional g,
                     const CertificationReport& report, int budget, double stop_tol) {
  if (!report.certified)
    throw std::invalid_argument("verify_gsp: report does not certify the instance");
  GspResult out;

  std::vector<double> starts;
  if (const FiniteInstance* fi = m.finite()) {
    for (int i = 0; i < fi->size(); ++i)
      if (fi->rel.contains(i, fi->apply(i))) starts.push_back(i);
  } else {
    const IntervalInstance& iv = *m.interval();
    for (int i = 0; i <= 8; ++i) {
      const double x = iv.domain.lo + iv.domain.length() * (static_cast<double>(i) / 8.0);
      if (iv.rel.contains(x, iv.apply(x))) starts.push_back(x);
    }
  }

  bool all_fixed = true;
  std::string first_bad;
  for (double x0 : starts) {
    OrbitTrace t = iterate(m, x0, budget, m.is_finite() ? 0.0 : stop_tol);
    if (t.outcome.kind != OrbitOutcome::Kind::FixedPoint && all_fixed) {
      all_fixed = false;
      first_bad = "orbit from " + (m.is_finite() ? std::to_string(static_cast<int>(x0))
                                                 : fmt_double(x0)) +
                  " did not reach a fixed point";
    }
    out.traces.push_back(std::move(t));
  }
  const Verdict asingleton = check_fix_asingleton(m);

  if (all_fixed && asingleton.ok()) {
    out.verdict = Verdict::pass("all " + std::to_string(starts.size()) +
                                " progressive starts converge");
    out.note = std::string("functional=") + to_string(g);
  } else {
    out.verdict = Verdict::fail(all_fixed ? "related distinct fixed points: " +
                                                asingleton.render()
                                          : first_bad);
    out.theorem_violation = true;
    out.note = std::string("THEOREM-VIOLATION: certified hypotheses with a failing "
                           "conclusion under functional=") +
               to_string(g);
  }
  return out;
}

}  // namespace relfix
