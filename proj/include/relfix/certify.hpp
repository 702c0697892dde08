#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "relfix/comparison.hpp"
#include "relfix/metric.hpp"

namespace relfix {

enum class VerdictKind { Pass, Fail, Vacuous, Bounded, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string note;
  int horizon = 0;                        // Bounded only
  std::optional<IndexPair> pair_witness;  // finite-carrier fail witnesses
  std::optional<double> point_witness;

  bool ok() const {
    return kind == VerdictKind::Pass || kind == VerdictKind::Vacuous ||
           kind == VerdictKind::Bounded;
  }
  std::string render() const;

  static Verdict pass(std::string note = "");
  static Verdict fail(std::string note);
  static Verdict fail_pair(int i, int j, std::string note);
  static Verdict vacuous(std::string note);
  static Verdict bounded(int horizon, std::string note = "");
  static Verdict unknown(std::string note);
};

struct ProgressiveSet {
  Verdict verdict;
  std::vector<int> points;  // finite carrier: X(T,R) in index order
  std::string desc;         // interval carrier: rendered set
};

/// One row of the gap table: at level eps, the largest admissible margin
/// delta (every related distinct pair with G below eps+delta maps within
/// eps), or unbounded when no pair ever maps above eps.
struct ModulusEntry {
  double eps = 0.0;
  bool unbounded = false;
  double delta = 0.0;
};

struct MkResult {
  Verdict verdict;
  std::vector<ModulusEntry> table;
};

struct RegularityVerdicts {
  Verdict complete;
  Verdict continuous;
  Verdict almost_selfclosed;
};

struct CertificationReport {
  bool finite = true;
  bool exact = false;
  int size = 0;
  Interval domain{};  // interval carrier only
  Functional g = Functional::A1;

  Verdict non_identical;
  ProgressiveSet semi_progressive;
  Verdict increasing;
  Verdict strict_nonexpansive;
  Verdict meir_keeler;
  Verdict phi_contractive;
  Verdict phi_admissible;
  Verdict psi_phi_contractive;
  Verdict pair_admissible;
  Verdict semi_recurrent;
  Verdict complete;
  Verdict continuous;
  Verdict almost_selfclosed;

  std::vector<int> complement_points;  // finite X without the progressive set
  std::vector<ModulusEntry> modulus;

  std::array<bool, 4> alternative{};  // continuity / selfclosed+G1 / phi / pair routes
  bool certified = false;
  int via = 0;  // first satisfied alternative, 1-based; 0 when not certified

  std::string render() const;
};

struct CertifyOptions {
  int horizon = 64;  // bounded window for the semi-recurrence check
  // Test hook for route wiring: overrides the continuity verdict.
  std::optional<VerdictKind> continuity_override;
};

Verdict check_nonidentical(const FiniteRelation& r);
Verdict check_nonidentical(const MetricInstance& m);
ProgressiveSet check_semi_progressive(const MetricInstance& m);
Verdict check_increasing(const MetricInstance& m);

/// Related distinct pairs must contract strictly: d(Tx,Ty) < G(x,y), with
/// the tolerance applied unless the instance is exact.
Verdict check_strict_nonexpansive(const FiniteInstance& m, Functional g);

/// Exact finite verification of the uniform-gap property, consulting the
/// strictness check first. The table reports, at each attained level and the
/// midpoints between consecutive levels, the largest admissible margin.
MkResult mk_modulus_table(const FiniteInstance& m, Functional g);

/// d(Tx,Ty) <= phi(G(x,y)) on related distinct pairs. Finite carriers check
/// exhaustively; interval carriers only admit the analytic A1 route.
Verdict check_g_phi_contractive(const MetricInstance& m, Functional g,
                                const ComparisonFunction& phi);

/// psi(d(Tx,Ty)) <= psi(G(x,y)) - phi(G(x,y)) on related distinct pairs.
Verdict check_psi_phi_contractive(const FiniteInstance& m, Functional g,
                                  const AlteringPair& pair);

/// Finite carriers are vacuous (no injective orbit exists); interval
/// carriers sample starts with injective orbit prefixes and search a
/// recurrence constant up to half the horizon. Bounded verdict.
Verdict check_finitely_semi_recurrent(const MetricInstance& m, int horizon);

RegularityVerdicts check_regularity(const MetricInstance& m);

/// Any two fixed points related by R coincide.
Verdict check_fix_asingleton(const MetricInstance& m);

CertificationReport certify(const MetricInstance& m, Functional g,
                            const std::optional<ComparisonFunction>& phi = std::nullopt,
                            const std::optional<AlteringPair>& pair = std::nullopt,
                            const CertifyOptions& opts = {});

}  // namespace relfix
