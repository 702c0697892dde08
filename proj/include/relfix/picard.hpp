#pragma once

#include <string>
#include <vector>

#include "relfix/certify.hpp"
#include "relfix/metric.hpp"

namespace relfix {

struct OrbitOutcome {
  enum class Kind { FixedPoint, Cycle, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  double value = 0.0;     // FixedPoint: the limit (index for finite carriers)
  int steps = 0;          // FixedPoint: first index attaining the limit
  int period = 0;         // Cycle
  int entry = 0;          // Cycle: index where the cycle starts
  double residual = 0.0;  // d(x_N, T x_N) at the stop
};

/// Orbit x_{n+1} = T x_n with per-step displacements rho_n = d(x_n, x_{n+1})
/// and the diagnostics the convergence argument predicts for certified
/// instances.
struct OrbitTrace {
  bool finite = true;
  double start = 0.0;
  std::vector<double> points;
  std::vector<double> rho;
  OrbitOutcome outcome;
  bool strict_descent = false;    // rho strictly falls while positive
  bool injective_prefix = false;  // no revisits before stabilization
  bool semi_cauchy = false;       // rho trends to 0
  std::string render() const;     // "n x_n rho_n" lines then an outcome line
};

int default_budget(const MetricInstance& m);

/// Runs until a fixed point (exact on finite carriers, rho <= stop_tol on
/// intervals), a revisit, or the budget. Finite carriers must pass an
/// integer-valued x0 inside the carrier.
OrbitTrace iterate(const MetricInstance& m, double x0, int budget, double stop_tol);

enum class CheckOutcome { Holds, Violated, NotApplicable };

/// Tail estimate d(x_n, x_{n+s}) < eps + delta/2 for all n past the first
/// index where every later displacement stays below delta/(4k). Returns
/// NotApplicable when the trace never gets that quiet.
CheckOutcome cauchy_estimate_check(const OrbitTrace& trace, const MetricInstance& m,
                                   double eps, double delta, int k);

struct GspResult {
  Verdict verdict;
  bool theorem_violation = false;  // a certified instance failed a guaranteed property
  std::vector<OrbitTrace> traces;  // by start point, deterministic order
  std::string note;
};

/// Runs the iteration from every progressive start (finite) or a sampled
/// set of progressive starts (interval) and requires: every orbit reaches a
/// fixed point, and related fixed points coincide. Refuses uncertified
/// reports. A certified instance failing here raises the violation flag:
/// this signals a defect, never expected behavior.
GspResult verify_gsp(const MetricInstance& m, Functional g,
                     const CertificationReport& report, int budget, double stop_tol);

}  // namespace relfix
