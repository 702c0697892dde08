#include "relfix/scenario.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "relfix/builders.hpp"
#include "relfix/numeric.hpp"
#include "relfix/oracle.hpp"
#include "relfix/picard.hpp"

namespace relfix {

namespace {

// Scenario numbers round-trip exactly, so they render at full precision
// rather than the 12-digit report form.
std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ':' || c == ';') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
      toks.push_back(std::string(1, c));
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

std::optional<int> to_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) return std::nullopt;
  if (v < -1000000 || v > 1000000) return std::nullopt;
  return static_cast<int>(v);
}

std::optional<double> to_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

struct RelSpec {
  enum class Mode { None, Pairs, Order, Trivial, Cyclic, Sigma, AlphaBeta };
  Mode mode = Mode::None;
  int line = 0;
  std::vector<IndexPair> pairs;
  int cyclic_p = 0;
  std::vector<std::vector<double>> blocks;  // raw numbers per block
  std::vector<double> values;               // sigma / alphabeta payload
};

std::optional<ScalarFn> parse_scalar_fn(const std::vector<std::string>& toks,
                                        std::string& error) {
  if (toks.size() < 2) {
    error = "missing function family";
    return std::nullopt;
  }
  const std::string& fam = toks[1];
  try {
    if (fam == "linear") {
      if (toks.size() != 3) {
        error = "linear takes exactly one parameter";
        return std::nullopt;
      }
      auto c = to_double(toks[2]);
      if (!c) {
        error = "bad linear slope '" + toks[2] + "'";
        return std::nullopt;
      }
      return ScalarFn::linear(*c);
    }
    if (fam == "ratio") {
      if (toks.size() != 2) {
        error = "ratio takes no parameters";
        return std::nullopt;
      }
      return ScalarFn::ratio();
    }
    if (fam == "table") {
      if (toks.size() < 4 || (toks.size() - 2) % 2 != 0) {
        error = "table takes threshold/value pairs";
        return std::nullopt;
      }
      std::vector<double> ts, vs;
      for (std::size_t i = 2; i + 1 < toks.size(); i += 2) {
        auto t = to_double(toks[i]);
        auto v = to_double(toks[i + 1]);
        if (!t || !v) {
          error = "bad table entry";
          return std::nullopt;
        }
        ts.push_back(*t);
        vs.push_back(*v);
      }
      return ScalarFn::table(std::move(ts), std::move(vs));
    }
  } catch (const std::invalid_argument& e) {
    error = e.what();
    return std::nullopt;
  }
  error = "unknown function family '" + fam + "'";
  return std::nullopt;
}

}  // namespace

ParsedScenario parse_scenario(std::string_view text) {
  ParsedScenario out;
  auto fail = [&out](int line, std::string msg) {
    out.errors.push_back({line, std::move(msg)});
  };

  bool have_carrier = false;
  bool finite = true;
  int carrier_line = 0;
  int n = 0;
  double lo = 0.0, hi = 0.0;

  std::map<IndexPair, std::pair<double, int>> dists;  // canonical (i<=j)
  std::map<int, std::pair<int, int>> map_entries;     // i -> (j, line)
  std::optional<std::pair<AffineMap, int>> affine;
  RelSpec rel;
  std::optional<Functional> func;
  int func_line = 0;
  std::optional<ComparisonFunction> phi;
  std::optional<ScalarFn> psi;
  int psi_line = 0;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const std::vector<std::string> t = tokenize(line);
    if (t.empty()) continue;
    const std::string& head = t[0];

    if (head == "points" || head == "interval") {
      if (have_carrier) {
        fail(lineno, "duplicate carrier directive");
        continue;
      }
      have_carrier = true;
      carrier_line = lineno;
      if (head == "points") {
        finite = true;
        auto v = t.size() == 2 ? to_int(t[1]) : std::nullopt;
        if (!v || *v < 1) {
          fail(lineno, "points takes one positive integer");
          have_carrier = false;
        } else {
          n = *v;
        }
      } else {
        finite = false;
        auto a = t.size() == 3 ? to_double(t[1]) : std::nullopt;
        auto b = t.size() == 3 ? to_double(t[2]) : std::nullopt;
        if (!a || !b || !(*a < *b)) {
          fail(lineno, "interval takes two reals with lo < hi");
          have_carrier = false;
        } else {
          lo = *a;
          hi = *b;
        }
      }
      continue;
    }
    if (!have_carrier) {
      fail(lineno, "carrier directive (points/interval) must come first");
      continue;
    }

    if (head == "dist") {
      if (!finite) {
        fail(lineno, "dist lines apply to finite carriers only");
        continue;
      }
      auto i = t.size() == 4 ? to_int(t[1]) : std::nullopt;
      auto j = t.size() == 4 ? to_int(t[2]) : std::nullopt;
      auto v = t.size() == 4 ? to_double(t[3]) : std::nullopt;
      if (!i || !j || !v) {
        fail(lineno, "dist takes: i j value");
        continue;
      }
      if (*i < 0 || *j < 0 || *i >= n || *j >= n) {
        fail(lineno, "dist indices out of range");
        continue;
      }
      const IndexPair key{std::min(*i, *j), std::max(*i, *j)};
      auto it = dists.find(key);
      if (it != dists.end() && it->second.first != *v) {
        fail(lineno, "conflicting dist for pair (" + std::to_string(key.first) + "," +
                         std::to_string(key.second) + ")");
        continue;
      }
      dists[key] = {*v, lineno};
      continue;
    }

    if (head == "map") {
      if (t.size() >= 2 && t[1] == "affine") {
        if (finite) {
          fail(lineno, "map affine applies to interval carriers only");
          continue;
        }
        auto a = t.size() == 4 ? to_double(t[2]) : std::nullopt;
        auto b = t.size() == 4 ? to_double(t[3]) : std::nullopt;
        if (!a || !b) {
          fail(lineno, "map affine takes: a b");
          continue;
        }
        if (affine) {
          fail(lineno, "duplicate map affine");
          continue;
        }
        affine = {{*a, *b}, lineno};
        continue;
      }
      if (!finite) {
        fail(lineno, "finite map entries apply to finite carriers only");
        continue;
      }
      auto i = t.size() == 3 ? to_int(t[1]) : std::nullopt;
      auto j = t.size() == 3 ? to_int(t[2]) : std::nullopt;
      if (!i || !j) {
        fail(lineno, "map takes: i j");
        continue;
      }
      if (*i < 0 || *j < 0 || *i >= n || *j >= n) {
        fail(lineno, "map indices out of range");
        continue;
      }
      auto it = map_entries.find(*i);
      if (it != map_entries.end() && it->second.first != *j) {
        fail(lineno, "conflicting map entry for point " + std::to_string(*i));
        continue;
      }
      map_entries[*i] = {*j, lineno};
      continue;
    }

    if (head == "rel") {
      if (t.size() < 2) {
        fail(lineno, "rel needs a form");
        continue;
      }
      const std::string& form = t[1];
      if (form == "pair") {
        if (rel.mode != RelSpec::Mode::None && rel.mode != RelSpec::Mode::Pairs) {
          fail(lineno, "rel pair conflicts with an earlier rel directive");
          continue;
        }
        auto i = t.size() == 4 ? to_int(t[2]) : std::nullopt;
        auto j = t.size() == 4 ? to_int(t[3]) : std::nullopt;
        if (!i || !j) {
          fail(lineno, "rel pair takes: i j");
          continue;
        }
        rel.mode = RelSpec::Mode::Pairs;
        rel.line = lineno;
        rel.pairs.push_back({*i, *j});
        continue;
      }
      if (rel.mode != RelSpec::Mode::None) {
        fail(lineno, "duplicate rel directive");
        continue;
      }
      rel.line = lineno;
      if (form == "order") {
        rel.mode = RelSpec::Mode::Order;
      } else if (form == "trivial") {
        rel.mode = RelSpec::Mode::Trivial;
      } else if (form == "cyclic") {
        auto p = t.size() >= 4 && t[3] == ":" ? to_int(t[2]) : std::nullopt;
        if (!p || *p < 2) {
          fail(lineno, "rel cyclic takes: p : block ; block ; ...");
          rel.mode = RelSpec::Mode::None;
          continue;
        }
        rel.mode = RelSpec::Mode::Cyclic;
        rel.cyclic_p = *p;
        rel.blocks.emplace_back();
        bool bad = false;
        for (std::size_t idx = 4; idx < t.size(); ++idx) {
          if (t[idx] == ";") {
            rel.blocks.emplace_back();
            continue;
          }
          auto v = to_double(t[idx]);
          if (!v) {
            fail(lineno, "bad block entry '" + t[idx] + "'");
            bad = true;
            break;
          }
          rel.blocks.back().push_back(*v);
        }
        if (bad) {
          rel.mode = RelSpec::Mode::None;
          continue;
        }
        if (static_cast<int>(rel.blocks.size()) != rel.cyclic_p) {
          fail(lineno, "rel cyclic: block count does not match p");
          rel.mode = RelSpec::Mode::None;
        }
      } else if (form == "sigma" || form == "alphabeta") {
        rel.mode = form == "sigma" ? RelSpec::Mode::Sigma : RelSpec::Mode::AlphaBeta;
        bool bad = false;
        for (std::size_t idx = 2; idx < t.size(); ++idx) {
          auto v = to_double(t[idx]);
          if (!v) {
            fail(lineno, "bad " + form + " entry '" + t[idx] + "'");
            bad = true;
            break;
          }
          rel.values.push_back(*v);
        }
        if (bad) rel.mode = RelSpec::Mode::None;
      } else {
        fail(lineno, "unknown rel form '" + form + "'");
      }
      continue;
    }

    if (head == "functional") {
      if (t.size() != 2) {
        fail(lineno, "functional takes one tag");
        continue;
      }
      auto f = parse_functional(t[1]);
      if (!f || !is_contraction_functional(*f)) {
        fail(lineno, "unknown functional '" + t[1] + "'");
        continue;
      }
      if (func) {
        fail(lineno, "duplicate functional");
        continue;
      }
      func = *f;
      func_line = lineno;
      continue;
    }

    if (head == "phi" || head == "psi") {
      std::string msg;
      auto fn = parse_scalar_fn(t, msg);
      if (!fn) {
        fail(lineno, head + ": " + msg);
        continue;
      }
      if (head == "phi") {
        if (phi) {
          fail(lineno, "duplicate phi");
          continue;
        }
        try {
          switch (fn->kind()) {
            case ScalarFn::Kind::Linear:
              phi = ComparisonFunction::linear(fn->slope());
              break;
            case ScalarFn::Kind::Ratio:
              phi = ComparisonFunction::ratio();
              break;
            case ScalarFn::Kind::Table:
              phi = ComparisonFunction::table(
                  {fn->thresholds().begin(), fn->thresholds().end()},
                  {fn->values().begin(), fn->values().end()});
              break;
          }
        } catch (const std::invalid_argument& e) {
          fail(lineno, std::string("phi: ") + e.what());
        }
      } else {
        if (psi) {
          fail(lineno, "duplicate psi");
          continue;
        }
        psi = std::move(fn);
        psi_line = lineno;
      }
      continue;
    }

    fail(lineno, "unknown directive '" + head + "'");
  }

  if (!have_carrier) {
    if (out.errors.empty()) fail(1, "missing carrier directive");
    return out;
  }

  out.selections.g = func.value_or(Functional::A1);
  (void)func_line;
  out.selections.phi = phi;
  if (psi) {
    if (!phi) {
      fail(psi_line, "psi given without phi; the pair needs both");
    } else {
      out.selections.pair = AlteringPair(*psi, phi->fn());
    }
  }

  if (finite) {
    // Every off-diagonal pair must be present.
    std::string missing;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (dists.find({i, j}) == dists.end()) {
          if (!missing.empty()) missing += " ";
          missing += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    if (!missing.empty()) fail(carrier_line, "missing dist for pairs: " + missing);

    std::string missing_map;
    for (int i = 0; i < n; ++i)
      if (map_entries.find(i) == map_entries.end()) {
        if (!missing_map.empty()) missing_map += " ";
        missing_map += std::to_string(i);
      }
    if (!missing_map.empty()) fail(carrier_line, "missing map for points: " + missing_map);

    if (rel.mode == RelSpec::Mode::None) fail(carrier_line, "missing rel directive");
    if (!out.errors.empty()) return out;

    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [key, val] : dists) {
      d(key.first, key.second) = val.first;
      d(key.second, key.first) = val.first;
    }
    std::vector<int> selfmap(n);
    for (const auto& [i, jl] : map_entries) selfmap[i] = jl.first;

    std::optional<FiniteRelation> relation;
    try {
      switch (rel.mode) {
        case RelSpec::Mode::Pairs: {
          PairSet ps;
          for (const auto& [i, j] : rel.pairs) {
            if (i < 0 || j < 0 || i >= n || j >= n)
              throw std::invalid_argument("rel pair index out of range");
            ps.insert({i, j});
          }
          relation = FiniteRelation(n, std::move(ps));
          break;
        }
        case RelSpec::Mode::Order:
          relation = FiniteRelation::less_equal(n);
          break;
        case RelSpec::Mode::Trivial:
          relation = FiniteRelation::full(n);
          break;
        case RelSpec::Mode::Cyclic: {
          CyclicCover cover;
          for (const auto& blk : rel.blocks) {
            cover.blocks.emplace_back();
            for (double v : blk) {
              if (v != static_cast<int>(v))
                throw std::invalid_argument("finite cover blocks take integer points");
              cover.blocks.back().push_back(static_cast<int>(v));
            }
          }
          relation = cyclic_relation(cover, n, selfmap);
          break;
        }
        case RelSpec::Mode::Sigma: {
          if (static_cast<int>(rel.values.size()) != n * n)
            throw std::invalid_argument("rel sigma needs n*n values");
          Eigen::MatrixXd s(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s(i, j) = rel.values[i * n + j];
          relation = sigma_relation(s);
          break;
        }
        case RelSpec::Mode::AlphaBeta: {
          if (static_cast<int>(rel.values.size()) != 2 * n * n)
            throw std::invalid_argument("rel alphabeta needs 2*n*n values");
          Eigen::MatrixXd a(n, n), b(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              a(i, j) = rel.values[i * n + j];
              b(i, j) = rel.values[n * n + i * n + j];
            }
          relation = alpha_beta_relation(a, b);
          break;
        }
        case RelSpec::Mode::None:
          break;
      }
    } catch (const std::invalid_argument& e) {
      fail(rel.line, e.what());
      return out;
    }

    MetricInstance instance{FiniteInstance(std::move(d), std::move(selfmap),
                                           std::move(*relation))};
    // Metric axioms become positioned validation errors.
    for (const AxiomViolation& v : verify_metric_axioms(instance)) {
      int where = carrier_line;
      const IndexPair key{std::min(v.i, v.k >= 0 ? v.k : v.j),
                          std::max(v.i, v.k >= 0 ? v.k : v.j)};
      auto it = dists.find(key);
      if (it != dists.end()) where = it->second.second;
      fail(where, v.detail);
    }
    if (!out.errors.empty()) return out;
    out.instance = std::move(instance);
    return out;
  }

  // Interval carrier.
  if (!dists.empty())
    fail(carrier_line, "dist lines apply to finite carriers only");
  if (!affine) fail(carrier_line, "interval carriers need a map affine line");
  if (rel.mode == RelSpec::Mode::None) fail(carrier_line, "missing rel directive");
  if (rel.mode == RelSpec::Mode::Pairs || rel.mode == RelSpec::Mode::Sigma)
    fail(rel.line, "this rel form applies to finite carriers only");
  if (!out.errors.empty()) return out;

  IntervalRelation irel;
  try {
    switch (rel.mode) {
      case RelSpec::Mode::Order:
        irel.kind = IntervalRelation::Kind::Order;
        break;
      case RelSpec::Mode::Trivial:
        irel.kind = IntervalRelation::Kind::Trivial;
        break;
      case RelSpec::Mode::Cyclic: {
        std::vector<Interval> blocks;
        for (const auto& blk : rel.blocks) {
          if (blk.size() != 2)
            throw std::invalid_argument("interval cover blocks take: lo hi");
          blocks.push_back({blk[0], blk[1]});
        }
        irel = cyclic_cover_relation(blocks, affine->first);
        break;
      }
      case RelSpec::Mode::AlphaBeta: {
        if (rel.values.size() != 4)
          throw std::invalid_argument("interval rel alphabeta takes: a0 a1 b0 b1");
        for (double v : rel.values)
          if (v < 0.0)
            throw std::invalid_argument("alphabeta coefficients must be nonnegative");
        irel.kind = IntervalRelation::Kind::AlphaBetaThreshold;
        irel.alpha0 = rel.values[0];
        irel.alpha1 = rel.values[1];
        irel.beta0 = rel.values[2];
        irel.beta1 = rel.values[3];
        break;
      }
      default:
        break;
    }
  } catch (const std::invalid_argument& e) {
    fail(rel.line, e.what());
    return out;
  }

  try {
    out.instance = MetricInstance(IntervalInstance({lo, hi}, affine->first, irel));
  } catch (const std::invalid_argument& e) {
    fail(carrier_line, e.what());
  }
  return out;
}

std::string render_scenario(const MetricInstance& m, const Selections& sel) {
  std::ostringstream os;
  if (const FiniteInstance* fi = m.finite()) {
    const int n = fi->size();
    os << "points " << n << "\n";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        os << "dist " << i << " " << j << " " << g17(fi->d(i, j)) << "\n";
    for (int i = 0; i < n; ++i) os << "map " << i << " " << fi->apply(i) << "\n";
    for (const auto& [i, j] : fi->rel.pairs()) os << "rel pair " << i << " " << j << "\n";
  } else {
    const IntervalInstance& iv = *m.interval();
    os << "interval " << g17(iv.domain.lo) << " " << g17(iv.domain.hi) << "\n";
    os << "map affine " << g17(iv.selfmap.a) << " " << g17(iv.selfmap.b) << "\n";
    using K = IntervalRelation::Kind;
    switch (iv.rel.kind) {
      case K::Trivial:
        os << "rel trivial\n";
        break;
      case K::Order:
        os << "rel order\n";
        break;
      case K::CyclicCover: {
        os << "rel cyclic " << iv.rel.blocks.size() << " :";
        for (std::size_t i = 0; i < iv.rel.blocks.size(); ++i) {
          if (i) os << " ;";
          os << " " << g17(iv.rel.blocks[i].lo) << " " << g17(iv.rel.blocks[i].hi);
        }
        os << "\n";
        break;
      }
      case K::AlphaBetaThreshold:
        os << "rel alphabeta " << g17(iv.rel.alpha0) << " " << g17(iv.rel.alpha1) << " "
           << g17(iv.rel.beta0) << " " << g17(iv.rel.beta1) << "\n";
        break;
    }
  }
  os << "functional " << to_string(sel.g) << "\n";
  auto render_fn = [&os](const char* head, const ScalarFn& fn) {
    os << head << " ";
    switch (fn.kind()) {
      case ScalarFn::Kind::Linear:
        os << "linear " << g17(fn.slope());
        break;
      case ScalarFn::Kind::Ratio:
        os << "ratio";
        break;
      case ScalarFn::Kind::Table: {
        os << "table";
        for (std::size_t i = 0; i < fn.thresholds().size(); ++i)
          os << " " << g17(fn.thresholds()[i]) << " " << g17(fn.values()[i]);
        break;
      }
    }
    os << "\n";
  };
  if (sel.phi) render_fn("phi", sel.phi->fn());
  if (sel.pair) render_fn("psi", sel.pair->psi);
  return os.str();
}

namespace {

void print_errors(const std::vector<ParseError>& errors, std::ostream& err) {
  for (const ParseError& e : errors)
    err << "line " << e.line << ": " << e.message << "\n";
}

}  // namespace

int cmd_certify(const std::string& scenario_text, const CertifyOptions& opts,
                std::ostream& out, std::ostream& err) {
  ParsedScenario sc = parse_scenario(scenario_text);
  if (!sc.ok()) {
    print_errors(sc.errors, err);
    return 2;
  }
  const CertificationReport rep =
      certify(*sc.instance, sc.selections.g, sc.selections.phi, sc.selections.pair, opts);
  out << rep.render();
  return rep.certified ? 0 : 1;
}

int cmd_iterate(const std::string& scenario_text, double from,
                std::optional<int> budget, std::optional<double> tol,
                std::ostream& out, std::ostream& err) {
  ParsedScenario sc = parse_scenario(scenario_text);
  if (!sc.ok()) {
    print_errors(sc.errors, err);
    return 2;
  }
  const MetricInstance& m = *sc.instance;
  const int steps = budget.value_or(default_budget(m));
  const double stop = tol.value_or(m.is_finite() ? 0.0 : 1e-9);
  OrbitTrace trace;
  try {
    trace = iterate(m, from, steps, stop);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  out << trace.render();
  return trace.outcome.kind == OrbitOutcome::Kind::FixedPoint ? 0 : 1;
}

std::string SearchSummary::render() const {
  std::ostringstream os;
  os << "generated=" << generated << " certified=" << certified
     << " gsp-pass=" << gsp_pass << " violations=" << violations << "\n";
  return os.str();
}

SearchSummary run_search(const SearchOptions& opts, std::ostream& out) {
  SearchSummary sum;
  constexpr Functional kSix[6] = {Functional::A1, Functional::B2, Functional::B3,
                                  Functional::B4, Functional::C1, Functional::C2};
  for (std::uint64_t seed = opts.seed_lo; seed <= opts.seed_hi; ++seed) {
    std::mt19937_64 prng(seed * 0x9e3779b97f4a7c15ULL + 1);
    const int n = 2 + static_cast<int>(prng() % static_cast<std::uint64_t>(
                                           std::max(1, opts.max_n - 1)));
    const MapKind map_kind = static_cast<MapKind>(prng() % 3);
    const MetricKind metric_kind = static_cast<MetricKind>(prng() % 2);
    const Functional g = kSix[prng() % 6];
    std::optional<ComparisonFunction> phi;
    std::optional<AlteringPair> pair;
    switch (prng() % 4) {
      case 1: phi = ComparisonFunction::linear(0.5); break;
      case 2: phi = ComparisonFunction::ratio(); break;
      case 3: phi = ComparisonFunction::table({1.0}, {1.0}); break;
      default: break;
    }
    if (prng() % 8 == 0) {
      phi = ComparisonFunction::linear(0.25);
      pair = AlteringPair(ScalarFn::linear(1.0), ScalarFn::linear(0.25));
    }

    const MetricInstance m = random_instance(seed, n, opts.density, map_kind, metric_kind);
    const FiniteInstance& fi = *m.finite();
    CertificationReport rep = certify(m, g, phi, pair);
    ++sum.generated;

    int seed_violations = 0;
    if (opts.inject_fault && !rep.certified) {
      rep.certified = true;  // forged certificate: the flag path must catch it
      rep.via = 1;
    }
    bool gsp_ok = false;
    if (rep.certified) {
      ++sum.certified;
      const GspResult gsp = verify_gsp(m, g, rep, default_budget(m), 0.0);
      gsp_ok = gsp.verdict.ok() && !gsp.theorem_violation;
      if (gsp_ok)
        ++sum.gsp_pass;
      else
        ++seed_violations;
      if (opts.cross_check && !oracle::brute_picard_conclusion(fi)) ++seed_violations;
    }
    if (opts.cross_check) {
      const Verdict brute = oracle::brute_mk_verdict(fi, g);
      const bool strict_ok = rep.strict_nonexpansive.ok();
      const bool mk_ok = rep.meir_keeler.ok();
      if (strict_ok != mk_ok || mk_ok != brute.ok()) ++seed_violations;
    }
    sum.violations += seed_violations;
    if (opts.verbose)
      out << "seed=" << seed << " n=" << n << " functional=" << to_string(g)
          << " certified=" << (rep.certified ? "yes" : "no")
          << " gsp=" << (rep.certified ? (gsp_ok ? "pass" : "FAIL") : "-")
          << " violations=" << seed_violations << "\n";
  }
  out << sum.render();
  return sum;
}

int cmd_search(const SearchOptions& opts, std::ostream& out, std::ostream& err) {
  (void)err;
  const SearchSummary sum = run_search(opts, out);
  return sum.violations == 0 ? 0 : 1;
}

}  // namespace relfix
