#pragma once

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relfix/relation.hpp"

namespace relfix {

/// Pointwise functionals built from distances between x, y and their images.
/// A1..A4 and B1 are the building blocks; A1, B2, B3, B4, C1, C2 are usable
/// as the comparison functional G of the contraction checks.
enum class Functional { A1, A2, A3, A4, B1, B2, B3, B4, C1, C2 };

bool is_contraction_functional(Functional f);
/// Class split of the six contraction functionals: first class {A1,B2,B4,C1},
/// second class {B3,C2}.
bool in_class_g1(Functional f);
bool in_class_g2(Functional f);
const char* to_string(Functional f);
std::optional<Functional> parse_functional(std::string_view s);

/// Finite carrier: n points, dense symmetric distance table, selfmap as an
/// index table, explicit relation. Construction validates structure only;
/// metric axioms are checked separately so defective tables can be built and
/// reported on.
struct FiniteInstance {
  Eigen::MatrixXd dist;
  std::vector<int> selfmap;
  FiniteRelation rel;
  bool exact = false;  // all distances integral: strict comparisons skip the tolerance

  FiniteInstance(Eigen::MatrixXd d, std::vector<int> map, FiniteRelation r);

  int size() const { return static_cast<int>(dist.rows()); }
  double d(int i, int j) const { return dist(i, j); }
  int apply(int i) const { return selfmap[i]; }

  friend bool operator==(const FiniteInstance& a, const FiniteInstance& b) {
    return a.dist == b.dist && a.selfmap == b.selfmap && a.rel == b.rel;
  }
};

struct AffineMap {
  double a = 1.0;
  double b = 0.0;
  double operator()(double x) const { return a * x + b; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Relation tags available on interval carriers. Membership is pointwise
/// evaluable for every tag; certification supports trivial/order analytically
/// and reports the rest as unsupported where no analytic argument exists.
struct IntervalRelation {
  enum class Kind { Trivial, Order, CyclicCover, AlphaBetaThreshold };
  Kind kind = Kind::Trivial;
  std::vector<Interval> blocks;  // CyclicCover: A_1..A_p, successor wraps around
  // AlphaBetaThreshold: related iff a0 + a1*|x-y| <= 1 and b0 + b1*|x-y| >= 1.
  double alpha0 = 0.0, alpha1 = 0.0, beta0 = 0.0, beta1 = 0.0;

  bool contains(double x, double y) const;
  friend bool operator==(const IntervalRelation&, const IntervalRelation&) = default;
};

/// Interval carrier: [lo, hi] with the absolute-difference metric and an
/// affine selfmap. Construction checks the map keeps the interval.
struct IntervalInstance {
  Interval domain;
  AffineMap selfmap;
  IntervalRelation rel;

  IntervalInstance(Interval dom, AffineMap map, IntervalRelation r);

  double d(double x, double y) const { return x >= y ? x - y : y - x; }
  double apply(double x) const { return selfmap(x); }

  friend bool operator==(const IntervalInstance&, const IntervalInstance&) = default;
};

class MetricInstance {
 public:
  explicit MetricInstance(FiniteInstance f) : v_(std::move(f)) {}
  explicit MetricInstance(IntervalInstance i) : v_(std::move(i)) {}

  bool is_finite() const { return std::holds_alternative<FiniteInstance>(v_); }
  const FiniteInstance* finite() const { return std::get_if<FiniteInstance>(&v_); }
  const IntervalInstance* interval() const { return std::get_if<IntervalInstance>(&v_); }

  friend bool operator==(const MetricInstance& a, const MetricInstance& b) {
    return a.v_ == b.v_;
  }

 private:
  std::variant<FiniteInstance, IntervalInstance> v_;
};

struct AxiomViolation {
  enum class Kind { Diagonal, Sufficiency, Symmetry, Triangle };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string detail;
};

/// All four metric axioms over all point triples; empty result means valid.
/// Interval carriers are trivially valid.
std::vector<AxiomViolation> verify_metric_axioms(const MetricInstance& m);

/// |d(x,y) - d(u,v)| <= d(x,u) + d(y,v).
bool lipschitz_inequality_check(const FiniteInstance& m, int x, int y, int u, int v);
bool lipschitz_inequality_check(const IntervalInstance& m, double x, double y, double u,
                                double v);

/// Max pairwise distance over a nonempty point set.
double diam(const FiniteInstance& m, std::span<const int> pts);
double diam(const IntervalInstance& m, std::span<const double> pts);

double eval_functional(const FiniteInstance& m, Functional f, int x, int y);
double eval_functional(const IntervalInstance& m, Functional f, double x, double y);

/// Lower/upper bounds of a contraction functional: A1 <= G <= B1 on all pairs
/// and G > 0 on related distinct pairs.
bool check_bounds(const FiniteInstance& m, Functional g);
/// Same check against externally supplied values (negative-control hook).
bool check_bounds(const FiniteInstance& m,
                  const std::function<double(int, int)>& g_values);

}  // namespace relfix
