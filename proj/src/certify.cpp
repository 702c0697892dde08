#include "relfix/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relfix/numeric.hpp"

namespace relfix {

Verdict Verdict::pass(std::string note) { return {VerdictKind::Pass, std::move(note)}; }
Verdict Verdict::fail(std::string note) { return {VerdictKind::Fail, std::move(note)}; }
Verdict Verdict::fail_pair(int i, int j, std::string note) {
  Verdict v{VerdictKind::Fail, std::move(note)};
  v.pair_witness = IndexPair{i, j};
  return v;
}
Verdict Verdict::vacuous(std::string note) {
  return {VerdictKind::Vacuous, std::move(note)};
}
Verdict Verdict::bounded(int horizon, std::string note) {
  Verdict v{VerdictKind::Bounded, std::move(note)};
  v.horizon = horizon;
  return v;
}
Verdict Verdict::unknown(std::string note) {
  return {VerdictKind::Unknown, std::move(note)};
}

std::string Verdict::render() const {
  std::string head;
  switch (kind) {
    case VerdictKind::Pass: head = "pass"; break;
    case VerdictKind::Fail: head = "fail"; break;
    case VerdictKind::Vacuous: head = "vacuous"; break;
    case VerdictKind::Bounded:
      head = "bounded horizon=" + std::to_string(horizon);
      break;
    case VerdictKind::Unknown: head = "unknown"; break;
  }
  std::string out = head;
  if (pair_witness)
    out += " witness=(" + std::to_string(pair_witness->first) + "," +
           std::to_string(pair_witness->second) + ")";
  else if (point_witness)
    out += " witness=" + fmt_double(*point_witness);
  if (!note.empty()) out += " (" + note + ")";
  return out;
}

namespace {

std::string render_index_set(const std::vector<int>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pts[i]);
  }
  out += "}";
  return out;
}

std::string render_interval(double lo, double hi) {
  return "[" + fmt_double(lo) + "," + fmt_double(hi) + "]";
}

// Window of distances s >= 0 admitted by an alpha/beta threshold relation:
// a0 + a1*s <= 1 and b0 + b1*s >= 1. Empty optional when infeasible.
std::optional<std::pair<double, double>> alphabeta_distance_window(
    const IntervalRelation& rel, double range) {
  double s_hi = range;
  if (rel.alpha1 > 0.0)
    s_hi = std::min(s_hi, (1.0 - rel.alpha0) / rel.alpha1);
  else if (rel.alpha0 > 1.0)
    return std::nullopt;
  double s_lo = 0.0;
  if (rel.beta1 > 0.0)
    s_lo = std::max(0.0, (1.0 - rel.beta0) / rel.beta1);
  else if (rel.beta0 < 1.0)
    return std::nullopt;
  if (s_lo > s_hi) return std::nullopt;
  return std::make_pair(s_lo, s_hi);
}

}  // namespace

Verdict check_nonidentical(const FiniteRelation& r) {
  for (const auto& [i, j] : r.pairs())
    if (i != j) return Verdict::pass();
  return Verdict::fail("every related pair is diagonal");
}

Verdict check_nonidentical(const MetricInstance& m) {
  if (const FiniteInstance* fi = m.finite()) return check_nonidentical(fi->rel);
  const IntervalInstance& iv = *m.interval();
  const IntervalRelation& rel = iv.rel;
  using K = IntervalRelation::Kind;
  switch (rel.kind) {
    case K::Trivial:
    case K::Order:
      return Verdict::pass("distinct related points exist on a nondegenerate interval");
    case K::CyclicCover: {
      const int p = static_cast<int>(rel.blocks.size());
      for (int i = 0; i < p; ++i) {
        const Interval& a = rel.blocks[i];
        const Interval& b = rel.blocks[(i + 1) % p];
        const bool both_same_singleton = a.lo == a.hi && b.lo == b.hi && a.lo == b.lo;
        if (!both_same_singleton)
          return Verdict::pass("consecutive blocks contain distinct points");
      }
      return Verdict::fail("all cover blocks are the same singleton");
    }
    case K::AlphaBetaThreshold: {
      auto win = alphabeta_distance_window(rel, iv.domain.length());
      if (win && win->second > 0.0) {
        Verdict v = Verdict::pass("positive distance admitted by the thresholds");
        v.point_witness = win->second;
        return v;
      }
      return Verdict::fail("thresholds admit no distinct pair");
    }
  }
  return Verdict::unknown("");
}

ProgressiveSet check_semi_progressive(const MetricInstance& m) {
  ProgressiveSet out;
  if (const FiniteInstance* fi = m.finite()) {
    for (int i = 0; i < fi->size(); ++i)
      if (fi->rel.contains(i, fi->apply(i))) out.points.push_back(i);
    out.desc = render_index_set(out.points);
    out.verdict = out.points.empty()
                      ? Verdict::fail("no point relates to its image")
                      : Verdict::pass();
    return out;
  }
  const IntervalInstance& iv = *m.interval();
  const double lo = iv.domain.lo, hi = iv.domain.hi;
  const double a = iv.selfmap.a, b = iv.selfmap.b;
  using K = IntervalRelation::Kind;
  switch (iv.rel.kind) {
    case K::Trivial:
      out.desc = render_interval(lo, hi);
      out.verdict = Verdict::pass("every point relates to its image");
      return out;
    case K::Order: {
      // x <= a*x + b, i.e. (1-a)*x <= b.
      if (a == 1.0) {
        if (b >= 0.0) {
          out.desc = render_interval(lo, hi);
          out.verdict = Verdict::pass();
        } else {
          out.desc = "{}";
          out.verdict = Verdict::fail("translation moves every point down");
        }
        return out;
      }
      const double cut = b / (1.0 - a);
      double set_lo = lo, set_hi = hi;
      if (a < 1.0)
        set_hi = std::min(hi, cut);
      else
        set_lo = std::max(lo, cut);
      if (set_lo <= set_hi) {
        out.desc = render_interval(set_lo, set_hi);
        out.verdict = Verdict::pass();
      } else {
        out.desc = "{}";
        out.verdict = Verdict::fail("no point lies below its image");
      }
      return out;
    }
    case K::CyclicCover: {
      const int p = static_cast<int>(iv.rel.blocks.size());
      std::string desc;
      bool any = false;
      for (int i = 0; i < p; ++i) {
        const Interval& blk = iv.rel.blocks[i];
        const Interval& nxt = iv.rel.blocks[(i + 1) % p];
        // Slice of blk mapping into nxt under x -> a*x + b.
        double piece_lo = blk.lo, piece_hi = blk.hi;
        if (a == 0.0) {
          if (!nxt.contains(b)) continue;
        } else {
          double pre_lo = (nxt.lo - b) / a;
          double pre_hi = (nxt.hi - b) / a;
          if (pre_lo > pre_hi) std::swap(pre_lo, pre_hi);
          piece_lo = std::max(piece_lo, pre_lo);
          piece_hi = std::min(piece_hi, pre_hi);
          if (piece_lo > piece_hi) continue;
        }
        if (!desc.empty()) desc += " u ";
        desc += render_interval(piece_lo, piece_hi);
        any = true;
      }
      out.desc = any ? desc : "{}";
      out.verdict = any ? Verdict::pass("block slices map into their successors")
                        : Verdict::fail("no block point maps into the next block");
      return out;
    }
    case K::AlphaBetaThreshold: {
      // x relates to Tx iff |(1-a)x - b| falls in the admitted window
      // (including 0 here: diagonal membership is allowed).
      auto win = alphabeta_distance_window(iv.rel, iv.domain.length());
      if (!win) {
        out.desc = "{}";
        out.verdict = Verdict::fail("thresholds admit no displacement");
        return out;
      }
      auto disp = [&](double x) { return std::abs((1.0 - a) * x - b); };
      double d_lo, d_hi;
      if (a == 1.0) {
        d_lo = d_hi = std::abs(b);
      } else {
        const double vertex = b / (1.0 - a);
        d_hi = std::max(disp(lo), disp(hi));
        d_lo = iv.domain.contains(vertex) ? 0.0 : std::min(disp(lo), disp(hi));
      }
      const double s_lo = std::max(d_lo, win->first);
      const double s_hi = std::min(d_hi, win->second);
      if (s_lo > s_hi) {
        out.desc = "{}";
        out.verdict = Verdict::fail("no displacement in the admitted window");
        return out;
      }
      // Recover a witness point with displacement s_lo.
      double witness = lo;
      if (a == 1.0) {
        witness = lo;
      } else {
        const double x1 = (b + s_lo) / (1.0 - a);
        const double x2 = (b - s_lo) / (1.0 - a);
        witness = iv.domain.contains(x1) ? x1 : x2;
      }
      out.desc = "displacement in " + render_interval(s_lo, s_hi);
      Verdict v = Verdict::pass();
      v.point_witness = witness;
      out.verdict = v;
      return out;
    }
  }
  out.verdict = Verdict::unknown("");
  return out;
}

Verdict check_increasing(const MetricInstance& m) {
  if (const FiniteInstance* fi = m.finite()) {
    for (const auto& [i, j] : fi->rel.pairs())
      if (!fi->rel.contains(fi->apply(i), fi->apply(j)))
        return Verdict::fail_pair(i, j, "images not related");
    return Verdict::pass();
  }
  const IntervalInstance& iv = *m.interval();
  using K = IntervalRelation::Kind;
  switch (iv.rel.kind) {
    case K::Trivial:
      return Verdict::pass();
    case K::Order:
      if (iv.selfmap.a >= 0.0) return Verdict::pass("monotone affine map");
      return Verdict::fail("negative slope reverses the order");
    case K::CyclicCover: {
      const int p = static_cast<int>(iv.rel.blocks.size());
      for (int i = 0; i < p; ++i) {
        const Interval& blk = iv.rel.blocks[i];
        const Interval& nxt = iv.rel.blocks[(i + 1) % p];
        const double y1 = iv.apply(blk.lo), y2 = iv.apply(blk.hi);
        const double img_lo = std::min(y1, y2), img_hi = std::max(y1, y2);
        if (img_lo < nxt.lo - 1e-12 || img_hi > nxt.hi + 1e-12)
          return Verdict::fail("block " + std::to_string(i + 1) +
                               " does not map into its successor");
      }
      return Verdict::pass("blocks map into their successors");
    }
    case K::AlphaBetaThreshold:
      return Verdict::unknown("unsupported analytic class");
  }
  return Verdict::unknown("");
}

Verdict check_strict_nonexpansive(const FiniteInstance& m, Functional g) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("check_strict_nonexpansive: not a contraction functional");
  const FiniteRelation related = m.rel.nonidentical_part();
  if (related.empty()) return Verdict::vacuous("no related distinct pairs");
  for (const auto& [x, y] : related.pairs()) {
    const double gv = eval_functional(m, g, x, y);
    const double dt = m.d(m.apply(x), m.apply(y));
    if (!strictly_less(dt, gv, m.exact))
      return Verdict::fail_pair(x, y, "image distance " + fmt_double(dt) +
                                          " not strictly below " + fmt_double(gv));
  }
  return Verdict::pass();
}

MkResult mk_modulus_table(const FiniteInstance& m, Functional g) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("mk_modulus_table: not a contraction functional");
  MkResult out;
  const FiniteRelation related = m.rel.nonidentical_part();
  if (related.empty()) {
    out.verdict = Verdict::vacuous("no related distinct pairs");
    return out;
  }

  struct PairValue {
    double g, dt;
  };
  std::vector<PairValue> pv;
  for (const auto& [x, y] : related.pairs())
    pv.push_back({eval_functional(m, g, x, y), m.d(m.apply(x), m.apply(y))});

  std::vector<double> levels;
  for (const auto& p : pv) levels.push_back(p.g);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<double> candidates;
  if (!levels.empty() && levels.front() > 0.0) candidates.push_back(levels.front() / 2.0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    candidates.push_back(levels[i]);
    if (i + 1 < levels.size()) candidates.push_back(0.5 * (levels[i] + levels[i + 1]));
  }

  for (double eps : candidates) {
    // First level whose pairs map above eps caps the admissible margin.
    double first_violating = std::numeric_limits<double>::infinity();
    for (const auto& p : pv)
      if (p.dt > eps) first_violating = std::min(first_violating, p.g);
    ModulusEntry e;
    e.eps = eps;
    if (std::isinf(first_violating)) {
      e.unbounded = true;
    } else {
      e.delta = std::max(0.0, first_violating - eps);
    }
    out.table.push_back(e);
  }

  // The uniform-gap condition on a finite pair set reduces to strict
  // nonexpansiveness: each image distance sits strictly below its own level,
  // and a finite set of such levels leaves a positive margin everywhere.
  // A tie or reversal kills every margin just below that level.
  Verdict strict = check_strict_nonexpansive(m, g);
  if (strict.kind == VerdictKind::Fail) {
    const auto [x, y] = *strict.pair_witness;
    const double gv = eval_functional(m, g, x, y);
    out.verdict = Verdict::fail_pair(
        x, y, "no admissible margin approaching level " + fmt_double(gv) + " from below");
  } else {
    out.verdict = Verdict::pass();
  }
  return out;
}

Verdict check_g_phi_contractive(const MetricInstance& m, Functional g,
                                const ComparisonFunction& phi) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("check_g_phi_contractive: not a contraction functional");
  if (const FiniteInstance* fi = m.finite()) {
    const FiniteRelation related = fi->rel.nonidentical_part();
    if (related.empty()) return Verdict::vacuous("no related distinct pairs");
    for (const auto& [x, y] : related.pairs()) {
      const double gv = eval_functional(*fi, g, x, y);
      const double dt = fi->d(fi->apply(x), fi->apply(y));
      if (!leq_with_slack(dt, phi(gv), fi->exact))
        return Verdict::fail_pair(x, y, "image distance " + fmt_double(dt) +
                                            " exceeds phi bound " + fmt_double(phi(gv)));
    }
    return Verdict::pass();
  }
  const IntervalInstance& iv = *m.interval();
  if (g != Functional::A1)
    return Verdict::unknown("unsupported analytic class: interval carrier needs A1");
  // Image distances scale by |a|; the bound must hold at every admissible
  // separation, which covers any relation tag.
  const double rate = std::abs(iv.selfmap.a);
  const double range = iv.domain.length();
  const ScalarFn& f = phi.fn();
  bool holds = false;
  std::string note;
  double witness = 0.0;
  switch (f.kind()) {
    case ScalarFn::Kind::Linear:
      holds = rate <= f.slope();
      note = "contraction rate " + fmt_double(rate) + " vs slope " + fmt_double(f.slope());
      witness = range;
      break;
    case ScalarFn::Kind::Ratio:
      holds = rate <= 1.0 / (1.0 + range);
      note = "contraction rate " + fmt_double(rate) + " vs worst ratio bound " +
             fmt_double(1.0 / (1.0 + range));
      witness = range;
      break;
    case ScalarFn::Kind::Table:
      holds = rate == 0.0;  // the bound vanishes on (0, min threshold]
      note = "step bound vanishes near 0";
      witness = std::min(range, f.thresholds().front());
      break;
  }
  if (holds) return Verdict::pass(note);
  using K = IntervalRelation::Kind;
  if (iv.rel.kind == K::Trivial || iv.rel.kind == K::Order) {
    Verdict v = Verdict::fail(note);
    v.point_witness = witness;
    return v;
  }
  return Verdict::unknown("bound fails on the full interval; relation tag not analytic");
}

Verdict check_psi_phi_contractive(const FiniteInstance& m, Functional g,
                                  const AlteringPair& pair) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("check_psi_phi_contractive: not a contraction functional");
  const FiniteRelation related = m.rel.nonidentical_part();
  if (related.empty()) return Verdict::vacuous("no related distinct pairs");
  for (const auto& [x, y] : related.pairs()) {
    const double gv = eval_functional(m, g, x, y);
    const double dt = m.d(m.apply(x), m.apply(y));
    if (!leq_with_slack(pair.psi(dt), pair.psi(gv) - pair.phi(gv), m.exact))
      return Verdict::fail_pair(x, y, "difference bound violated at level " + fmt_double(gv));
  }
  return Verdict::pass();
}

Verdict check_finitely_semi_recurrent(const MetricInstance& m, int horizon) {
  if (horizon < 2)
    throw std::invalid_argument("check_finitely_semi_recurrent: horizon must be >= 2");
  if (m.finite())
    return Verdict::vacuous("finite carrier: no orbit is injective");
  const IntervalInstance& iv = *m.interval();
  const double lo = iv.domain.lo, hi = iv.domain.hi;

  std::vector<double> starts;
  for (int i = 0; i <= 8; ++i)
    starts.push_back(lo + (hi - lo) * (static_cast<double>(i) / 8.0));

  const int k_max = std::max(1, horizon / 2);
  bool any_admissible = false;
  int k_used = 0;
  for (double x0 : starts) {
    if (!iv.rel.contains(x0, iv.apply(x0))) continue;
    // Orbit prefix; skip starts whose prefix revisits a point.
    std::vector<double> orbit{x0};
    bool injective = true;
    for (int i = 0; i < horizon && injective; ++i) {
      const double next = iv.apply(orbit.back());
      for (double seen : orbit)
        if (std::abs(seen - next) <= 1e-12) {
          injective = false;
          break;
        }
      orbit.push_back(next);
    }
    if (!injective) continue;
    any_admissible = true;

    std::set<int> spec;
    for (int i = 1; i <= horizon; ++i)
      if (iv.rel.contains(x0, orbit[i])) spec.insert(i);

    bool found = false;
    for (int k = 1; k <= k_max && !found; ++k) {
      bool all_covered = true;
      for (int n = 1; n <= horizon && all_covered; ++n) {
        bool covered = false;
        for (int q : spec) {
          if (q > n) break;
          if (n < q + k) {
            covered = true;
            break;
          }
        }
        all_covered = covered;
      }
      if (all_covered) {
        found = true;
        k_used = std::max(k_used, k);
      }
    }
    if (!found) {
      std::string prefix;
      int shown = 0;
      for (int q : spec) {
        if (shown++ == 8) break;
        if (!prefix.empty()) prefix += ",";
        prefix += std::to_string(q);
      }
      Verdict v = Verdict::fail("spectrum {" + prefix +
                                "} leaves gaps wider than every k up to " +
                                std::to_string(k_max));
      v.point_witness = x0;
      return v;
    }
  }
  if (!any_admissible)
    return Verdict::vacuous("no sampled start is orbital admissible");
  return Verdict::bounded(horizon, "recurrence constant k=" + std::to_string(k_used));
}

RegularityVerdicts check_regularity(const MetricInstance& m) {
  RegularityVerdicts out;
  if (const FiniteInstance* fi = m.finite()) {
    out.complete = Verdict::pass("finite carrier: Cauchy sequences are eventually constant");
    out.continuous = Verdict::pass("finite carrier: sequential continuity is automatic");
    // Finite-carrier reduction: an ascending orbital sequence can only
    // converge by stabilizing at a fixed point z, and its late terms all
    // equal z, so the subsequence requirement is reflexivity at z.
    const int n = fi->size();
    for (int x = 0; x < n; ++x) {
      if (!fi->rel.contains(x, fi->apply(x))) continue;
      int cur = x;
      for (int step = 0; step <= n; ++step) {
        const int next = fi->apply(cur);
        if (next == cur) break;
        cur = next;
      }
      if (fi->apply(cur) == cur && !fi->rel.contains(cur, cur)) {
        out.almost_selfclosed = Verdict::fail_pair(
            cur, cur, "stabilization point not reflexively related (finite-carrier reduction)");
        return out;
      }
    }
    out.almost_selfclosed = Verdict::pass("finite-carrier reduction");
    return out;
  }
  const IntervalInstance& iv = *m.interval();
  out.complete = Verdict::pass("closed interval");
  out.continuous = Verdict::pass("affine map");
  using K = IntervalRelation::Kind;
  switch (iv.rel.kind) {
    case K::Trivial:
      out.almost_selfclosed = Verdict::pass("trivial relation");
      break;
    case K::Order:
      out.almost_selfclosed =
          Verdict::pass("ascending sequences sit below their limits");
      break;
    default:
      out.almost_selfclosed = Verdict::unknown("unsupported analytic class");
      break;
  }
  return out;
}

Verdict check_fix_asingleton(const MetricInstance& m) {
  if (const FiniteInstance* fi = m.finite()) {
    std::vector<int> fixed;
    for (int i = 0; i < fi->size(); ++i)
      if (fi->apply(i) == i) fixed.push_back(i);
    for (int z1 : fixed)
      for (int z2 : fixed)
        if (z1 != z2 && fi->rel.contains(z1, z2))
          return Verdict::fail_pair(z1, z2, "distinct related fixed points");
    return Verdict::pass("fixed points " + render_index_set(fixed));
  }
  const IntervalInstance& iv = *m.interval();
  const double a = iv.selfmap.a, b = iv.selfmap.b;
  if (a == 1.0) {
    if (b != 0.0) return Verdict::pass("no fixed points");
    // Identity map: every point is fixed.
    Verdict related = check_nonidentical(m);
    if (related.kind == VerdictKind::Pass)
      return Verdict::fail("identity map with a relation admitting distinct pairs");
    return Verdict::pass("identity map but no distinct related pairs");
  }
  const double z = b / (1.0 - a);
  if (iv.domain.contains(z))
    return Verdict::pass("unique fixed point at " + fmt_double(z));
  return Verdict::pass("no fixed points in the interval");
}

namespace {

Verdict from_classification(const Classification& c) {
  switch (c.verdict) {
    case Verdict3::Proven: {
      Verdict v = Verdict::pass(c.note);
      return v;
    }
    case Verdict3::Refuted: {
      Verdict v = Verdict::fail(c.note);
      v.point_witness = c.witness;
      return v;
    }
    case Verdict3::Unknown:
      return Verdict::unknown(c.note);
  }
  return Verdict::unknown("");
}

const char* roman(int i) {
  switch (i) {
    case 1: return "i";
    case 2: return "ii";
    case 3: return "iii";
    case 4: return "iv";
  }
  return "?";
}

}  // namespace

CertificationReport certify(const MetricInstance& m, Functional g,
                            const std::optional<ComparisonFunction>& phi,
                            const std::optional<AlteringPair>& pair,
                            const CertifyOptions& opts) {
  if (!is_contraction_functional(g))
    throw std::invalid_argument("certify: not a contraction functional");
  CertificationReport rep;
  rep.g = g;
  const FiniteInstance* fi = m.finite();
  rep.finite = fi != nullptr;
  if (fi) {
    rep.exact = fi->exact;
    rep.size = fi->size();
  } else {
    rep.domain = m.interval()->domain;
  }

  rep.non_identical = check_nonidentical(m);
  rep.semi_progressive = check_semi_progressive(m);
  rep.increasing = check_increasing(m);

  if (phi) {
    rep.phi_contractive = check_g_phi_contractive(m, g, *phi);
    rep.phi_admissible = from_classification(classify_meir_keeler(*phi));
  } else {
    rep.phi_contractive = Verdict::vacuous("no phi supplied");
    rep.phi_admissible = Verdict::vacuous("no phi supplied");
  }
  if (pair) {
    rep.psi_phi_contractive =
        fi ? check_psi_phi_contractive(*fi, g, *pair)
           : Verdict::unknown("unsupported analytic class: interval carrier");
    const AlteringPairReport pr = check_altering_pair(*pair);
    Classification overall{pr.overall(), pr.witness(),
                           pr.grid_resolution ? "up to grid resolution" : ""};
    rep.pair_admissible = from_classification(overall);
  } else {
    rep.psi_phi_contractive = Verdict::vacuous("no pair supplied");
    rep.pair_admissible = Verdict::vacuous("no pair supplied");
  }

  if (fi) {
    rep.strict_nonexpansive = check_strict_nonexpansive(*fi, g);
    MkResult mk = mk_modulus_table(*fi, g);
    rep.meir_keeler = mk.verdict;
    rep.modulus = std::move(mk.table);
  } else {
    // Interval carriers certify the contraction through the phi route: a
    // regressive bound gives strictness, an admissible bound gives the
    // uniform gap.
    if (phi && rep.phi_contractive.kind == VerdictKind::Pass) {
      rep.strict_nonexpansive = Verdict::pass("via the regressive phi bound");
      rep.meir_keeler = rep.phi_admissible.kind == VerdictKind::Pass
                            ? Verdict::pass("via the admissible phi bound")
                            : Verdict::unknown("phi not proven admissible");
    } else {
      rep.strict_nonexpansive = Verdict::unknown("unsupported analytic class");
      rep.meir_keeler = Verdict::unknown("unsupported analytic class");
    }
  }

  rep.semi_recurrent = check_finitely_semi_recurrent(m, opts.horizon);

  RegularityVerdicts reg = check_regularity(m);
  rep.complete = reg.complete;
  rep.continuous = reg.continuous;
  rep.almost_selfclosed = reg.almost_selfclosed;
  if (opts.continuity_override) {
    rep.continuous = Verdict{*opts.continuity_override,
                             "overridden for route testing", 0, std::nullopt,
                             std::nullopt};
  }

  if (fi) {
    for (int i = 0; i < fi->size(); ++i)
      if (!fi->rel.contains(i, fi->apply(i))) rep.complement_points.push_back(i);
  }

  const bool core = rep.non_identical.ok() && rep.semi_progressive.verdict.ok() &&
                    rep.increasing.ok() && rep.strict_nonexpansive.ok() &&
                    rep.meir_keeler.ok() && rep.semi_recurrent.ok() &&
                    rep.complete.ok();
  rep.alternative[0] = rep.continuous.ok();
  rep.alternative[1] = rep.almost_selfclosed.ok() && in_class_g1(g);
  rep.alternative[2] = rep.almost_selfclosed.ok() &&
                       rep.phi_contractive.kind == VerdictKind::Pass &&
                       rep.phi_admissible.kind == VerdictKind::Pass;
  rep.alternative[3] = rep.almost_selfclosed.ok() &&
                       rep.psi_phi_contractive.kind == VerdictKind::Pass &&
                       rep.pair_admissible.kind == VerdictKind::Pass;
  const bool any_route =
      rep.alternative[0] || rep.alternative[1] || rep.alternative[2] || rep.alternative[3];
  rep.certified = core && any_route;
  if (rep.certified)
    for (int i = 0; i < 4; ++i)
      if (rep.alternative[i]) {
        rep.via = i + 1;
        break;
      }
  return rep;
}

std::string CertificationReport::render() const {
  std::ostringstream os;
  if (finite)
    os << "instance: finite n=" << size << " mode=" << (exact ? "exact" : "tolerance")
       << "\n";
  else
    os << "instance: interval lo=" << fmt_double(domain.lo)
       << " hi=" << fmt_double(domain.hi) << "\n";
  os << "functional: " << to_string(g) << " class=" << (in_class_g1(g) ? "G1" : "G2")
     << "\n";
  os << "check non-identical: " << non_identical.render() << "\n";
  os << "check semi-progressive: " << semi_progressive.verdict.render()
     << " set=" << semi_progressive.desc << "\n";
  os << "check increasing: " << increasing.render() << "\n";
  os << "check strict-nonexpansive: " << strict_nonexpansive.render() << "\n";
  os << "check meir-keeler: " << meir_keeler.render() << "\n";
  for (const ModulusEntry& e : modulus) {
    os << "modulus: eps=" << fmt_double(e.eps) << " delta=";
    if (e.unbounded)
      os << "unbounded";
    else
      os << fmt_double(e.delta);
    os << "\n";
  }
  os << "check phi-contractive: " << phi_contractive.render() << "\n";
  os << "check phi-admissible: " << phi_admissible.render() << "\n";
  os << "check psi-phi-contractive: " << psi_phi_contractive.render() << "\n";
  os << "check pair-admissible: " << pair_admissible.render() << "\n";
  os << "check finitely-semi-recurrent: " << semi_recurrent.render() << "\n";
  os << "check complete: " << complete.render() << "\n";
  os << "check continuous: " << continuous.render() << "\n";
  os << "check almost-selfclosed: " << almost_selfclosed.render() << "\n";
  if (finite) os << "complement-set: " << render_index_set(complement_points) << "\n";
  os << "alternatives:";
  for (int i = 0; i < 4; ++i)
    os << " " << roman(i + 1) << "=" << (alternative[i] ? "yes" : "no");
  os << "\n";
  if (certified)
    os << "certified: yes via=" << roman(via) << "\n";
  else
    os << "certified: no\n";
  return os.str();
}

}  // namespace relfix
