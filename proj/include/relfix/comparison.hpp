#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relfix {

enum class Verdict3 { Proven, Refuted, Unknown };
const char* to_string(Verdict3 v);

struct Classification {
  Verdict3 verdict = Verdict3::Unknown;
  std::optional<double> witness;  // refuting point, when one exists
  std::string note;
};

/// Scalar function on [0, inf) in one of three encodings:
///   linear(c):  t -> c*t
///   ratio:      t -> t/(1+t)
///   step table: thresholds t_1 < ... < t_m (> 0), values v_1 <= ... <= v_m;
///               f(t) = value of the highest threshold strictly below t,
///               0 when there is none. So f is 0 on [0, t_1] and jumps just
///               after each threshold (left-continuous).
/// One-sided limits are exact by construction; no numeric limiting anywhere.
class ScalarFn {
 public:
  enum class Kind { Linear, Ratio, Table };

  static ScalarFn linear(double c);
  static ScalarFn ratio();
  static ScalarFn table(std::vector<double> thresholds, std::vector<double> values);

  double operator()(double t) const;
  double left_limit(double s) const;   // f(s-0), s > 0
  double right_limit(double s) const;  // f(s+0), s >= 0

  Kind kind() const { return kind_; }
  double slope() const { return c_; }  // Linear only
  std::span<const double> thresholds() const { return thresholds_; }
  std::span<const double> values() const { return values_; }
  bool nondecreasing() const;

  friend bool operator==(const ScalarFn&, const ScalarFn&) = default;

 private:
  ScalarFn(Kind k, double c, std::vector<double> ts, std::vector<double> vs);

  Kind kind_ = Kind::Linear;
  double c_ = 0.0;
  std::vector<double> thresholds_;
  std::vector<double> values_;
};

/// A regressive function: phi(0) = 0 and phi(t) < t for all t > 0. The
/// constructors prove regressivity analytically and refuse anything else:
/// linear needs c < 1, step tables need v_k <= t_k.
class ComparisonFunction {
 public:
  static ComparisonFunction linear(double c);
  static ComparisonFunction ratio();
  static ComparisonFunction table(std::vector<double> thresholds,
                                  std::vector<double> values);

  const ScalarFn& fn() const { return fn_; }
  double operator()(double t) const { return fn_(t); }

  friend bool operator==(const ComparisonFunction&, const ComparisonFunction&) = default;

 private:
  explicit ComparisonFunction(ScalarFn fn) : fn_(std::move(fn)) {}
  ScalarFn fn_;
};

double eval_phi(const ComparisonFunction& phi, double t);

/// Right-limit quantities of a regressive function at s > 0:
/// lambda_plus = inf over eps > 0 of sup phi over (s, s+eps), which for these
/// families is the right limit; lambda_sup = max(phi(s), lambda_plus). The
/// chain 0 <= phi(s) <= lambda_sup <= s always holds.
struct LimitQuantities {
  double s = 0.0;
  double phi_s = 0.0;
  double lambda_plus = 0.0;
  double lambda_sup = 0.0;
};

LimitQuantities lambda_plus(const ComparisonFunction& phi, double s);

/// lambda_sup(s) < s for all s > 0. Analytic for linear/ratio; exact
/// breakpoint analysis for tables (refuted with witness s* when some
/// threshold has lambda_sup(s*) = s*).
Classification classify_boyd_wong(const ComparisonFunction& phi);

/// Nondecreasing with iterates phi^n(t) -> 0 for every t > 0. Closed-form
/// for linear/ratio; tables collapse to 0 after finitely many steps through
/// the value chain. The grid/budget arguments drive a numeric confirmation
/// of the decay on top of the analytic argument.
Classification classify_matkowski(const ComparisonFunction& phi,
                                  std::span<const double> grid = {},
                                  int iter_budget = 64);

/// For every gap level g > 0 there is a margin below which phi stays <= g.
/// Proven directly for tables by breakpoint analysis, otherwise routed
/// through whichever of the two classes above is proven.
Classification classify_meir_keeler(const ComparisonFunction& phi);

/// Pair (psi, phi) for the difference-form contraction: psi nondecreasing,
/// phi(0) = 0 and phi dominating the jumps of psi.
struct AlteringPair {
  ScalarFn psi;
  ScalarFn phi;

  AlteringPair(ScalarFn psi_fn, ScalarFn phi_fn);
  friend bool operator==(const AlteringPair&, const AlteringPair&) = default;
};

struct AlteringPairReport {
  Classification jump_condition;     // phi(e) > psi(e) - psi(e-0) for all e > 0
  Classification tail_condition;     // liminf of phi just right of e exceeds psi(e+0) - psi(e)
  bool grid_resolution = false;      // true when a verdict rests on grid samples only
  Verdict3 overall() const;
  std::optional<double> witness() const;
};

AlteringPairReport check_altering_pair(const AlteringPair& p,
                                       std::span<const double> grid = {});

/// 1024 log-spaced points in [1e-6, 1e3], plus the given breakpoints and the
/// midpoints between consecutive breakpoints. Breakpoints are the only
/// discontinuity sites of the table family.
std::vector<double> default_grid(std::span<const double> breakpoints = {});

}  // namespace relfix
