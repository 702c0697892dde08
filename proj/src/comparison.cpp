#include "relfix/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relfix/numeric.hpp"

namespace relfix {

const char* to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::Proven: return "proven";
    case Verdict3::Refuted: return "refuted";
    case Verdict3::Unknown: return "unknown";
  }
  return "?";
}

ScalarFn::ScalarFn(Kind k, double c, std::vector<double> ts, std::vector<double> vs)
    : kind_(k), c_(c), thresholds_(std::move(ts)), values_(std::move(vs)) {}

ScalarFn ScalarFn::linear(double c) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw std::invalid_argument("linear: slope must be a finite nonnegative real");
  return ScalarFn(Kind::Linear, c, {}, {});
}

ScalarFn ScalarFn::ratio() { return ScalarFn(Kind::Ratio, 0.0, {}, {}); }

ScalarFn ScalarFn::table(std::vector<double> thresholds, std::vector<double> values) {
  if (thresholds.empty() || thresholds.size() != values.size())
    throw std::invalid_argument("table: need matching nonempty threshold/value lists");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > 0.0) || !std::isfinite(thresholds[i]))
      throw std::invalid_argument("table: thresholds must be positive reals");
    if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
      throw std::invalid_argument("table: values must be nonnegative reals");
    if (i > 0 && !(thresholds[i] > thresholds[i - 1]))
      throw std::invalid_argument("table: thresholds must be strictly increasing");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("table: values must be nondecreasing");
  }
  return ScalarFn(Kind::Table, 0.0, std::move(thresholds), std::move(values));
}

namespace {

// Value of the highest threshold strictly below t (0 if none).
double table_at(std::span<const double> ts, std::span<const double> vs, double t) {
  double out = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < t)
      out = vs[i];
    else
      break;
  }
  return out;
}

// Value of the highest threshold <= s: the limit from the right.
double table_right(std::span<const double> ts, std::span<const double> vs, double s) {
  double out = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] <= s)
      out = vs[i];
    else
      break;
  }
  return out;
}

}  // namespace

double ScalarFn::operator()(double t) const {
  if (t < 0.0) throw std::invalid_argument("scalar function: negative argument");
  switch (kind_) {
    case Kind::Linear: return c_ * t;
    case Kind::Ratio: return t / (1.0 + t);
    case Kind::Table: return table_at(thresholds_, values_, t);
  }
  return 0.0;
}

double ScalarFn::left_limit(double s) const {
  if (s <= 0.0) throw std::invalid_argument("left_limit: need s > 0");
  switch (kind_) {
    case Kind::Linear: return c_ * s;
    case Kind::Ratio: return s / (1.0 + s);
    case Kind::Table: return table_at(thresholds_, values_, s);  // left-continuous
  }
  return 0.0;
}

double ScalarFn::right_limit(double s) const {
  if (s < 0.0) throw std::invalid_argument("right_limit: need s >= 0");
  switch (kind_) {
    case Kind::Linear: return c_ * s;
    case Kind::Ratio: return s / (1.0 + s);
    case Kind::Table: return table_right(thresholds_, values_, s);
  }
  return 0.0;
}

bool ScalarFn::nondecreasing() const { return true; }  // every encoding is

ComparisonFunction ComparisonFunction::linear(double c) {
  if (!(c >= 0.0 && c < 1.0))
    throw std::invalid_argument("comparison function: linear slope must be in [0,1)");
  return ComparisonFunction(ScalarFn::linear(c));
}

ComparisonFunction ComparisonFunction::ratio() {
  return ComparisonFunction(ScalarFn::ratio());
}

ComparisonFunction ComparisonFunction::table(std::vector<double> thresholds,
                                             std::vector<double> values) {
  ScalarFn fn = ScalarFn::table(std::move(thresholds), std::move(values));
  // f(t) = v_k on (t_k, t_{k+1}], so f(t) < t everywhere needs v_k <= t_k.
  auto ts = fn.thresholds();
  auto vs = fn.values();
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (vs[i] > ts[i])
      throw std::invalid_argument(
          "comparison function: table value exceeds its threshold, not regressive");
  return ComparisonFunction(std::move(fn));
}

double eval_phi(const ComparisonFunction& phi, double t) { return phi(t); }

LimitQuantities lambda_plus(const ComparisonFunction& phi, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("lambda_plus: need s > 0");
  LimitQuantities q;
  q.s = s;
  q.phi_s = phi(s);
  q.lambda_plus = phi.fn().right_limit(s);
  q.lambda_sup = std::max(q.phi_s, q.lambda_plus);
  return q;
}

Classification classify_boyd_wong(const ComparisonFunction& phi) {
  const ScalarFn& f = phi.fn();
  switch (f.kind()) {
    case ScalarFn::Kind::Linear:
      return {Verdict3::Proven, std::nullopt, "right limit is c*s < s"};
    case ScalarFn::Kind::Ratio:
      return {Verdict3::Proven, std::nullopt, "right limit is s/(1+s) < s"};
    case ScalarFn::Kind::Table: {
      // lambda_sup(s) = v_k on [t_k, t_{k+1}); the only candidates for
      // equality with s are the thresholds themselves.
      auto ts = f.thresholds();
      auto vs = f.values();
      for (std::size_t i = 0; i < ts.size(); ++i)
        if (vs[i] == ts[i])
          return {Verdict3::Refuted, ts[i],
                  "right limit at the threshold equals the threshold"};
      return {Verdict3::Proven, std::nullopt, "all table values below their thresholds"};
    }
  }
  return {Verdict3::Unknown, std::nullopt, ""};
}

Classification classify_matkowski(const ComparisonFunction& phi,
                                  std::span<const double> grid, int iter_budget) {
  const ScalarFn& f = phi.fn();
  Classification result;
  switch (f.kind()) {
    case ScalarFn::Kind::Linear:
      result = {Verdict3::Proven, std::nullopt, "iterates decay geometrically"};
      break;
    case ScalarFn::Kind::Ratio:
      result = {Verdict3::Proven, std::nullopt, "n-th iterate is t/(1+n*t)"};
      break;
    case ScalarFn::Kind::Table: {
      auto ts = f.thresholds();
      auto vs = f.values();
      if (vs.back() <= ts.front()) {
        result = {Verdict3::Proven, std::nullopt, "second iterate is identically 0"};
        break;
      }
      // One application lands in the finite value set; iterates then strictly
      // decrease through it until they reach the zero region.
      bool all_collapse = true;
      for (double v : vs) {
        double t = v;
        int steps = 0;
        while (t > 0.0 && steps <= static_cast<int>(vs.size()) + 1) {
          const double next = f(t);
          if (next >= t) {
            all_collapse = false;
            break;
          }
          t = next;
          ++steps;
        }
        if (t != 0.0) all_collapse = false;
        if (!all_collapse) break;
      }
      result = all_collapse
                   ? Classification{Verdict3::Proven, std::nullopt,
                                    "value chain reaches 0 in finitely many steps"}
                   : Classification{Verdict3::Unknown, std::nullopt,
                                    "value chain did not collapse"};
      break;
    }
  }
  // Numeric confirmation of the decay on the supplied grid.
  if (result.verdict == Verdict3::Proven && !grid.empty()) {
    for (double t0 : grid) {
      if (!(t0 > 0.0)) continue;
      double t = t0;
      for (int i = 0; i < iter_budget && t > 1e-300; ++i) {
        const double next = f(t);
        if (next > t) return {Verdict3::Unknown, t0, "grid iterate failed to decay"};
        if (next == t && t > 0.0) {
          // A fixed positive value contradicts regressivity; treat as defect.
          return {Verdict3::Unknown, t0, "grid iterate stalled at a positive value"};
        }
        t = next;
      }
    }
  }
  return result;
}

Classification classify_meir_keeler(const ComparisonFunction& phi) {
  const ScalarFn& f = phi.fn();
  if (f.kind() == ScalarFn::Kind::Table) {
    // Direct case split: for a gap level g in [t_k, t_{k+1}) the function is
    // at most v_k <= t_k <= g slightly above g, so a margin always exists.
    auto ts = f.thresholds();
    auto vs = f.values();
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (vs[i] > ts[i])
        return {Verdict3::Refuted, ts[i], "no margin below the threshold works"};
    return {Verdict3::Proven, std::nullopt, "breakpoint analysis"};
  }
  if (classify_boyd_wong(phi).verdict == Verdict3::Proven)
    return {Verdict3::Proven, std::nullopt, "via the right-limit class"};
  if (classify_matkowski(phi).verdict == Verdict3::Proven)
    return {Verdict3::Proven, std::nullopt, "via the iterate-decay class"};
  return {Verdict3::Unknown, std::nullopt, ""};
}

AlteringPair::AlteringPair(ScalarFn psi_fn, ScalarFn phi_fn)
    : psi(std::move(psi_fn)), phi(std::move(phi_fn)) {
  if (!psi.nondecreasing())
    throw std::invalid_argument("altering pair: psi must be nondecreasing");
  if (phi(0.0) != 0.0)
    throw std::invalid_argument("altering pair: phi(0) must be 0");
}

Verdict3 AlteringPairReport::overall() const {
  if (jump_condition.verdict == Verdict3::Refuted ||
      tail_condition.verdict == Verdict3::Refuted)
    return Verdict3::Refuted;
  if (jump_condition.verdict == Verdict3::Proven &&
      tail_condition.verdict == Verdict3::Proven)
    return Verdict3::Proven;
  return Verdict3::Unknown;
}

std::optional<double> AlteringPairReport::witness() const {
  if (jump_condition.witness) return jump_condition.witness;
  return tail_condition.witness;
}

namespace {

// liminf of phi(t) as t decreases to e from strictly above. All three
// encodings have genuine right limits, so this is the right limit.
double right_liminf(const ScalarFn& f, double e) { return f.right_limit(e); }

}  // namespace

AlteringPairReport check_altering_pair(const AlteringPair& p,
                                       std::span<const double> grid) {
  AlteringPairReport rep;
  const ScalarFn& psi = p.psi;
  const ScalarFn& phi = p.phi;

  std::vector<double> pts(grid.begin(), grid.end());
  if (pts.empty()) {
    std::vector<double> bps(psi.thresholds().begin(), psi.thresholds().end());
    bps.insert(bps.end(), phi.thresholds().begin(), phi.thresholds().end());
    pts = default_grid(bps);
  }

  // phi(e) > psi(e) - psi(e-0) for all e > 0. The table encoding is
  // left-continuous, so the left jump is 0 everywhere and the condition is
  // exactly phi > 0 on (0, inf).
  for (double e : pts) {
    if (!(e > 0.0)) continue;
    const double jump = psi(e) - psi.left_limit(e);
    if (!(phi(e) > jump)) {
      rep.jump_condition = {Verdict3::Refuted, e, "phi does not dominate the jump"};
      break;
    }
  }
  if (rep.jump_condition.verdict != Verdict3::Refuted) {
    const bool positive_everywhere =
        (phi.kind() == ScalarFn::Kind::Linear && phi.slope() > 0.0) ||
        phi.kind() == ScalarFn::Kind::Ratio;
    if (phi.kind() == ScalarFn::Kind::Table)
      rep.jump_condition = {Verdict3::Refuted, phi.thresholds().front(),
                            "phi vanishes below its first threshold"};
    else if (positive_everywhere)
      rep.jump_condition = {Verdict3::Proven, std::nullopt, "phi positive on (0,inf)"};
    else if (phi.kind() == ScalarFn::Kind::Linear && phi.slope() == 0.0)
      rep.jump_condition = {Verdict3::Refuted, pts.empty() ? 1.0 : pts.front(),
                            "phi is identically 0"};
    else {
      rep.jump_condition = {Verdict3::Unknown, std::nullopt, "grid only"};
      rep.grid_resolution = true;
    }
  }

  // liminf_{t -> e+} phi(t) > psi(e+0) - psi(e) for all e > 0. Away from the
  // thresholds of psi the right side is 0; at a threshold it is the right
  // jump. Both sides are exact per family.
  Classification tail{Verdict3::Proven, std::nullopt, "right jumps dominated"};
  auto check_at = [&](double e) -> bool {
    const double rhs = psi.right_limit(e) - psi(e);
    return right_liminf(phi, e) > rhs;
  };
  if (psi.kind() == ScalarFn::Kind::Table) {
    for (double t : psi.thresholds())
      if (!check_at(t)) {
        tail = {Verdict3::Refuted, t, "phi tail does not clear the jump"};
        break;
      }
  }
  if (tail.verdict == Verdict3::Proven) {
    // Off the jump sites the requirement is a strictly positive tail.
    const bool tail_positive =
        (phi.kind() == ScalarFn::Kind::Linear && phi.slope() > 0.0) ||
        phi.kind() == ScalarFn::Kind::Ratio;
    if (!tail_positive) {
      bool ok = true;
      double bad = 0.0;
      for (double e : pts) {
        if (!(e > 0.0)) continue;
        if (!check_at(e)) {
          ok = false;
          bad = e;
          break;
        }
      }
      if (!ok)
        tail = {Verdict3::Refuted, bad, "tail not positive"};
      else {
        tail = {Verdict3::Unknown, std::nullopt, "grid only"};
        rep.grid_resolution = true;
      }
    }
  }
  rep.tail_condition = tail;
  return rep;
}

std::vector<double> default_grid(std::span<const double> breakpoints) {
  std::vector<double> pts;
  pts.reserve(1024 + 2 * breakpoints.size());
  const double lo = 1e-6, hi = 1e3;
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < 1024; ++i)
    pts.push_back(lo * std::exp(ratio * (static_cast<double>(i) / 1023.0)));
  std::vector<double> bps(breakpoints.begin(), breakpoints.end());
  std::sort(bps.begin(), bps.end());
  for (std::size_t i = 0; i < bps.size(); ++i) {
    pts.push_back(bps[i]);
    if (i + 1 < bps.size()) pts.push_back(0.5 * (bps[i] + bps[i + 1]));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace relfix
